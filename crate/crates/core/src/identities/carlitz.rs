use crate::weights::{WeightContext, WeightError, WeightFamily};
use crate::{ExactScalar, Rational};

/// Which sequence pair a symmetric-weight convolution runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CarlitzVariant {
    /// `∑ T(n,k)·U_{rk}·V_{r(n−k)}` for a Lucas pair.
    Lucas,
    /// `∑ T(n,k)·u_{rk−1}(x)·t_{r(n−k)}(x)`.
    Chebyshev,
}

/// Closed form of a symmetric-weight convolution:
/// `U_{rn}·∑T(n,k)` or `(u_{rn−1}/2)·∑T(n,k)`.
///
/// The weight row sum uses the family's closed form when one exists at this
/// `(r, n)` and falls back to direct summation otherwise.
pub fn carlitz_rhs(
    w: WeightFamily,
    ctx: &WeightContext,
    r: i64,
    n: i64,
    variant: CarlitzVariant,
) -> Result<ExactScalar, WeightError> {
    let ctx = ctx.clone().with_r(r);
    let total = match w.closed_sum(&ctx, n) {
        Ok(s) => s,
        Err(WeightError::ClosedFormUndefined { .. } | WeightError::Unsupported(_)) => w.row_sum(&ctx, n)?,
        Err(e) => return Err(e),
    };
    let factor = match variant {
        CarlitzVariant::Lucas => {
            let l = ctx.lucas.as_ref().ok_or(WeightError::MissingContext {
                family: w.id(),
                what: "a Lucas pair",
            })?;
            ExactScalar::Rational(l.u.at(r * n))
        }
        CarlitzVariant::Chebyshev => {
            let c = ctx.chebyshev.as_ref().ok_or(WeightError::MissingContext {
                family: w.id(),
                what: "a Chebyshev table",
            })?;
            ExactScalar::Poly(c.u(r * n - 1).scale(&Rational::new(1.into(), 2.into())))
        }
    };
    Ok(factor * total)
}
