//! The built-in identity catalog.
//!
//! Sequence symbols: `F` Fibonacci, `L` Lucas, `P` Pell, `Q` Pell-Lucas,
//! `J` Jacobsthal, `j` Jacobsthal-Lucas, `B` balancing, `C` Lucas-balancing,
//! `U`/`V` Lucas sequences of the first/second kind, `t`/`u` Chebyshev
//! polynomials of the first/second kind.

use std::sync::Arc;

use num_traits::Zero;

use crate::exactmath::{pow_i64, ExactDiv, Ring};
use crate::sequences::{HoradamParams, LucasPair, NamedSequence};
use crate::weights::{WeightContext, WeightFamily};
use crate::{ChebyshevTable, ExactScalar, Horadam, Poly, Rational};

use super::{
    carlitz_rhs, convolve, weighted_convolve, CarlitzVariant, Guard, HoradamPair, IdentityEntry, IdentityError,
    Provenance, ScalarDomain, Side,
};

type Seq = Arc<Horadam>;

fn int(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `base^e` for any integer `e`.
fn pw(base: i64, e: i64) -> Rational {
    pow_i64(&int(base), e).expect("non-zero base")
}

fn conv(x: &Seq, y: &Seq, r: i64, n: i64) -> Rational {
    convolve(|i| x.at(i), |i| y.at(i), r, n)
}

fn rational(
    id: &str,
    statement: &str,
    provenance: Provenance,
    lhs: impl Fn(i64, i64) -> Rational + Send + Sync + 'static,
    rhs: impl Fn(i64, i64) -> Rational + Send + Sync + 'static,
) -> IdentityEntry {
    let l: Side = Arc::new(move |r, n| Ok(ExactScalar::Rational(lhs(r, n))));
    let r: Side = Arc::new(move |r, n| Ok(ExactScalar::Rational(rhs(r, n))));
    IdentityEntry::new(id, statement, ScalarDomain::Rational, provenance, l, r)
}

fn polynomial(
    id: &str,
    statement: &str,
    provenance: Provenance,
    lhs: impl Fn(i64, i64) -> Poly + Send + Sync + 'static,
    rhs: impl Fn(i64, i64) -> Result<Poly, crate::exactmath::ArithError> + Send + Sync + 'static,
) -> IdentityEntry {
    let l: Side = Arc::new(move |r, n| Ok(ExactScalar::Poly(lhs(r, n))));
    let r: Side = Arc::new(move |r, n| Ok(ExactScalar::Poly(rhs(r, n)?)));
    IdentityEntry::new(id, statement, ScalarDomain::Polynomial, provenance, l, r)
}

/// Skips `r` where `value(r)` vanishes.
fn nonzero<T: Zero>(label: &'static str, value: impl Fn(i64) -> T + Send + Sync + 'static) -> Guard {
    Arc::new(move |r, _| value(r).is_zero().then(|| format!("{label} = 0")))
}

struct Seqs {
    f: Seq,
    l: Seq,
    p: Seq,
    q: Seq,
    jb: Seq,
    jl: Seq,
    b: Seq,
    c: Seq,
    cheb: Arc<ChebyshevTable>,
}

impl Seqs {
    fn new() -> Self {
        let s = |n: NamedSequence| Arc::new(n.sequence());
        use NamedSequence::*;
        Self {
            f: s(Fibonacci),
            l: s(Lucas),
            p: s(Pell),
            q: s(PellLucas),
            jb: s(Jacobsthal),
            jl: s(JacobsthalLucas),
            b: s(Balancing),
            c: s(LucasBalancing),
            cheb: Arc::new(ChebyshevTable::new()),
        }
    }
}

/// An ordered collection of identity entries.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: Vec<IdentityEntry>,
}

impl Catalog {
    pub fn new(entries: Vec<IdentityEntry>) -> Self {
        Self { entries }
    }

    /// Every built-in entry, in listing order.
    pub fn builtin() -> Self {
        let s = Seqs::new();
        let mut entries = Vec::new();
        classical(&s, &mut entries);
        same_recurrence(&s, &mut entries);
        lucas_families(&mut entries);
        chebyshev(&s, &mut entries);
        horadam_pairs(&s, &mut entries);
        as_printed_horadam(&s, &mut entries);
        weighted(&s, &mut entries);
        Self { entries }
    }

    pub fn entries(&self) -> &[IdentityEntry] {
        &self.entries
    }

    pub fn push(&mut self, entry: IdentityEntry) {
        self.entries.push(entry);
    }

    pub fn get(&self, id: &str) -> Option<&IdentityEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn by_provenance(&self, p: Provenance) -> Vec<IdentityEntry> {
        self.entries.iter().filter(|e| e.provenance == p).cloned().collect()
    }

    pub fn theorem_derived(&self) -> Vec<IdentityEntry> {
        self.by_provenance(Provenance::TheoremDerived)
    }

    pub fn as_printed(&self) -> Vec<IdentityEntry> {
        self.by_provenance(Provenance::AsPrinted)
    }

    pub fn with_tag(&self, tag: &str) -> Vec<IdentityEntry> {
        self.entries.iter().filter(|e| e.has_tag(tag)).cloned().collect()
    }

    /// The named entries, in the order given.
    pub fn select_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<Vec<IdentityEntry>, IdentityError> {
        ids.iter()
            .map(|id| {
                self.get(id.as_ref())
                    .cloned()
                    .ok_or_else(|| IdentityError::UnknownIdentity(id.as_ref().to_string()))
            })
            .collect()
    }

    /// All tags in first-seen order.
    pub fn tags(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for t in self.entries.iter().flat_map(|e| e.tags.iter()) {
            if !out.contains(&t.as_str()) {
                out.push(t);
            }
        }
        out
    }
}

fn classical(s: &Seqs, out: &mut Vec<IdentityEntry>) {
    let td = Provenance::TheoremDerived;
    let tags = ["classical"];
    let (f, l, p, jb, jl, b) = (&s.f, &s.l, &s.p, &s.jb, &s.jl, &s.b);

    let (f1, f2, l2) = (f.clone(), f.clone(), l.clone());
    out.push(
        rational(
            "classic_fib_fib",
            "∑ F_k F_{n−k} = ((n+1)L_n − 2F_{n+1})/5",
            td,
            move |r, n| conv(&f1, &f1, r, n),
            move |_, n| (int(n + 1) * l2.at(n) - int(2) * f2.at(n + 1)) / int(5),
        )
        .at_stride(1)
        .with_tags(&tags),
    );
    let (f1, l1, l2) = (f.clone(), l.clone(), l.clone());
    out.push(
        rational(
            "classic_lucas_lucas",
            "∑ L_k L_{n−k} = (n+1)L_n + 2F_{n+1}",
            td,
            move |r, n| conv(&l1, &l1, r, n),
            move |_, n| int(n + 1) * l2.at(n) + int(2) * f1.at(n + 1),
        )
        .at_stride(1)
        .with_tags(&tags),
    );
    let (f1, l1, f2) = (f.clone(), l.clone(), f.clone());
    out.push(
        rational(
            "classic_lucas_fib",
            "∑ L_k F_{n−k} = (n+1)F_n",
            td,
            move |r, n| conv(&l1, &f1, r, n),
            move |_, n| int(n + 1) * f2.at(n),
        )
        .at_stride(1)
        .with_tags(&tags),
    );
    let (j1, f1, j2, f2) = (jb.clone(), f.clone(), jb.clone(), f.clone());
    out.push(
        rational(
            "classic_jacobsthal_fib",
            "∑ J_k F_{n−k} = J_{n+1} − F_{n+1}",
            td,
            move |r, n| conv(&j1, &f1, r, n),
            move |_, n| j2.at(n + 1) - f2.at(n + 1),
        )
        .at_stride(1)
        .with_tags(&tags),
    );
    let (p1, f1, p2, f2) = (p.clone(), f.clone(), p.clone(), f.clone());
    out.push(
        rational(
            "classic_pell_fib",
            "∑ P_k F_{n−k} = P_n − F_n",
            td,
            move |r, n| conv(&p1, &f1, r, n),
            move |_, n| p2.at(n) - f2.at(n),
        )
        .at_stride(1)
        .with_tags(&tags),
    );
    let (l1, j1, jl2, l2) = (l.clone(), jb.clone(), jl.clone(), l.clone());
    out.push(
        rational(
            "classic_lucas_jacobsthal",
            "∑ L_k J_{n−k} = j_{n+1} − L_{n+1}",
            td,
            move |r, n| conv(&l1, &j1, r, n),
            move |_, n| jl2.at(n + 1) - l2.at(n + 1),
        )
        .at_stride(1)
        .with_tags(&tags),
    );
    let (f1, b1, f2, b2) = (f.clone(), b.clone(), f.clone(), b.clone());
    out.push(
        rational(
            "classic_fib_balancing",
            "∑ F_{2k} B_{2(n−k)} = (B_{2n} − 6F_{2n})/31",
            td,
            move |r, n| conv(&f1, &b1, r, n),
            move |_, n| (b2.at(2 * n) - int(6) * f2.at(2 * n)) / int(31),
        )
        .at_stride(2)
        .with_tags(&tags),
    );
}

fn same_recurrence(s: &Seqs, out: &mut Vec<IdentityEntry>) {
    let td = Provenance::TheoremDerived;
    let tags = ["same-recurrence"];
    let mut scaled = |id: &str, st: &str, x: &Seq, y: &Seq, res: &Seq, c: Rational| {
        let (x, y, res) = (x.clone(), y.clone(), res.clone());
        out.push(
            rational(
                id,
                st,
                td,
                move |r, n| conv(&x, &y, r, n),
                move |r, n| int(n + 1) * c.clone() * res.at(r * n),
            )
            .with_tags(&tags),
        );
    };
    scaled(
        "pell_pell_lucas",
        "∑ P_{rk} Q_{r(n−k)} = (n+1)P_{rn}",
        &s.p,
        &s.q,
        &s.p,
        int(1),
    );
    scaled(
        "jacobsthal_jacobsthal_lucas",
        "∑ J_{rk} j_{r(n−k)} = (n+1)J_{rn}",
        &s.jb,
        &s.jl,
        &s.jb,
        int(1),
    );
    scaled(
        "balancing_lucas_balancing",
        "∑ B_{rk} C_{r(n−k)} = ((n+1)/2)B_{rn}",
        &s.b,
        &s.c,
        &s.b,
        frac(1, 2),
    );
    scaled(
        "lucas_fib",
        "∑ L_{rk} F_{r(n−k)} = (n+1)F_{rn}",
        &s.l,
        &s.f,
        &s.f,
        int(1),
    );

    let (f, l) = (s.f.clone(), s.l.clone());
    let (f2, l2) = (s.f.clone(), s.l.clone());
    let fg = s.f.clone();
    out.push(
        rational(
            "fib_self",
            "5F_r ∑ F_{rk} F_{r(n−k)} = (n+1)F_r L_{rn} − 2F_{r(n+1)}",
            td,
            move |r, n| int(5) * f.at(r) * conv(&f, &f, r, n),
            move |r, n| int(n + 1) * f2.at(r) * l2.at(r * n) - int(2) * f2.at(r * (n + 1)),
        )
        .with_guard(nonzero("F_r", move |r| fg.at(r)))
        .with_tags(&tags),
    );
    let (f2, l2, fg) = (s.f.clone(), s.l.clone(), s.f.clone());
    let f1 = s.f.clone();
    out.push(
        rational(
            "lucas_self",
            "F_r ∑ L_{rk} L_{r(n−k)} = (n+1)F_r L_{rn} + 2F_{r(n+1)}",
            td,
            move |r, n| f1.at(r) * conv(&l, &l, r, n),
            move |r, n| int(n + 1) * f2.at(r) * l2.at(r * n) + int(2) * f2.at(r * (n + 1)),
        )
        .with_guard(nonzero("F_r", move |r| fg.at(r)))
        .with_tags(&tags),
    );
}

/// `(p, q)` pairs used to instantiate the generic Lucas-sequence identities.
const LUCAS_PARAMS: [(i64, i64); 7] = [(1, -1), (2, -1), (1, -2), (6, 1), (3, -5), (-2, 3), (3, 2)];

fn pq_suffix(p: i64, q: i64) -> String {
    let s = |v: i64| if v < 0 { format!("m{}", -v) } else { v.to_string() };
    format!("p{}_q{}", s(p), s(q))
}

fn lucas_families(out: &mut Vec<IdentityEntry>) {
    let td = Provenance::TheoremDerived;
    for (p, q) in LUCAS_PARAMS {
        let pair = LucasPair::new(int(p), int(q)).expect("non-zero parameters");
        let (u, v, delta) = (pair.u.clone(), pair.v.clone(), pair.discriminant());
        let sfx = pq_suffix(p, q);
        let tags = ["same-recurrence", "lucas"];
        let at = format!("(p, q) = ({p}, {q})");

        let (u1, v1, u2) = (u.clone(), v.clone(), u.clone());
        out.push(
            rational(
                &format!("lucas_uv_{sfx}"),
                &format!("∑ U_{{rk}} V_{{r(n−k)}} = (n+1)U_{{rn}}, {at}"),
                td,
                move |r, n| conv(&u1, &v1, r, n),
                move |r, n| int(n + 1) * u2.at(r * n),
            )
            .with_tags(&tags),
        );

        let (u1, u2, v2, ug) = (u.clone(), u.clone(), v.clone(), u.clone());
        let d = delta.clone();
        out.push(
            rational(
                &format!("lucas_uu_self_{sfx}"),
                &format!("U_r Δ ∑ U_{{rk}} U_{{r(n−k)}} = (n+1)U_r V_{{rn}} − 2U_{{r(n+1)}}, Δ = p² − 4q, {at}"),
                td,
                move |r, n| u1.at(r) * d.clone() * conv(&u1, &u1, r, n),
                move |r, n| int(n + 1) * u2.at(r) * v2.at(r * n) - int(2) * u2.at(r * (n + 1)),
            )
            .with_guard(nonzero("U_r", move |r| ug.at(r)))
            .with_tags(&tags),
        );

        let (u1, v1, u2, v2, ug) = (u.clone(), v.clone(), u.clone(), v.clone(), u.clone());
        out.push(
            rational(
                &format!("lucas_vv_self_{sfx}"),
                &format!("U_r ∑ V_{{rk}} V_{{r(n−k)}} = (n+1)U_r V_{{rn}} + 2U_{{r(n+1)}}, {at}"),
                td,
                move |r, n| u1.at(r) * conv(&v1, &v1, r, n),
                move |r, n| int(n + 1) * u2.at(r) * v2.at(r * n) + int(2) * u2.at(r * (n + 1)),
            )
            .with_guard(nonzero("U_r", move |r| ug.at(r)))
            .with_tags(&tags),
        );

        let (u1, v1, u2, v2) = (u.clone(), v.clone(), u.clone(), v.clone());
        out.push(
            rational(
                &format!("lucas_uv_squared_{sfx}"),
                &format!("∑ U_{{2r(n−k)}} V_{{2rk}} = (n+1)U_{{rn}} V_{{rn}}, {at}"),
                td,
                move |r, n| conv(&v1, &u1, 2 * r, n),
                move |r, n| int(n + 1) * u2.at(r * n) * v2.at(r * n),
            )
            .with_tags(&tags),
        );

        let (v1, u2, v2, ug) = (v.clone(), u.clone(), v.clone(), u.clone());
        out.push(
            rational(
                &format!("lucas_vv_squared_{sfx}"),
                &format!("∑ V_{{2rk}} V_{{2r(n−k)}} = (n+1)(V_{{rn}}² − 2q^{{rn}}) + 2U_{{2r(n+1)}}/U_{{2r}}, {at}"),
                td,
                move |r, n| conv(&v1, &v1, 2 * r, n),
                move |r, n| {
                    let vrn = v2.at(r * n);
                    int(n + 1) * (vrn.clone() * vrn - int(2) * pw(q, r * n))
                        + int(2) * u2.at(2 * r * (n + 1)) / u2.at(2 * r)
                },
            )
            .with_guard(nonzero("U_{2r}", move |r| ug.at(2 * r)))
            .with_tags(&tags),
        );
    }
}

fn chebyshev(s: &Seqs, out: &mut Vec<IdentityEntry>) {
    let td = Provenance::TheoremDerived;
    let ap = Provenance::AsPrinted;
    let tags = ["chebyshev"];
    let c = &s.cheb;
    let pconv = |c: &ChebyshevTable, f: fn(&ChebyshevTable, i64) -> Poly, g: fn(&ChebyshevTable, i64) -> Poly, r, n| {
        convolve(|i| f(c, i), |i| g(c, i), r, n)
    };
    let t = |c: &ChebyshevTable, i| c.t(i);
    let u = |c: &ChebyshevTable, i| c.u(i);
    let half = frac(1, 2);
    let u_prev_guard = |c: &Arc<ChebyshevTable>| {
        let c = c.clone();
        nonzero("u_{r−1}(x)", move |r| c.u(r - 1))
    };

    let (c1, c2) = (c.clone(), c.clone());
    out.push(
        polynomial(
            "cheb_tu",
            "2u_{r−1} ∑ t_{rk} u_{r(n−k)} = (n+1)u_{r−1} u_{rn} + u_{rn+r−1}",
            td,
            move |r, n| (&c1.u(r - 1) * &pconv(&c1, t, u, r, n)).scale(&int(2)),
            move |r, n| Ok(&(&c2.u(r - 1) * &c2.u(r * n)).scale(&int(n + 1)) + &c2.u(r * n + r - 1)),
        )
        .with_guard(u_prev_guard(c))
        .with_tags(&tags),
    );
    let (c1, c2) = (c.clone(), c.clone());
    out.push(
        polynomial(
            "cheb_tt_self",
            "2u_{r−1} ∑ t_{rk} t_{r(n−k)} = (n+1)u_{r−1} t_{rn} + u_{rn+r−1}",
            td,
            move |r, n| (&c1.u(r - 1) * &pconv(&c1, t, t, r, n)).scale(&int(2)),
            move |r, n| Ok(&(&c2.u(r - 1) * &c2.t(r * n)).scale(&int(n + 1)) + &c2.u(r * n + r - 1)),
        )
        .with_guard(u_prev_guard(c))
        .with_tags(&tags),
    );
    let (c1, c2) = (c.clone(), c.clone());
    out.push(
        polynomial(
            "cheb_uu_self",
            "2(x² − 1)u_{r−1} ∑ u_{rk} u_{r(n−k)} = (n+1)u_{r−1} t_{rn+2} − u_{rn+r−1}",
            td,
            move |r, n| &(&Poly::from_i64s(&[-2, 0, 2]) * &c1.u(r - 1)) * &pconv(&c1, u, u, r, n),
            move |r, n| Ok(&(&c2.u(r - 1) * &c2.t(r * n + 2)).scale(&int(n + 1)) - &c2.u(r * n + r - 1)),
        )
        .with_guard(u_prev_guard(c))
        .with_tags(&tags),
    );
    let (c1, c2) = (c.clone(), c.clone());
    out.push(
        polynomial(
            "cheb_tu_squared",
            "∑ t_{2rk} u_{2r(n−k)−1} = (n+1)t_{rn} u_{rn−1}",
            td,
            move |r, n| convolve(|i| c1.t(i), |i| c1.u(i - 1), 2 * r, n),
            move |r, n| Ok((&c2.t(r * n) * &c2.u(r * n - 1)).scale(&int(n + 1))),
        )
        .with_note("second factor carries the index shift u_{m−1} = (λ^m − γ^m)/(λ − γ)")
        .with_tags(&tags),
    );
    let (c1, c2, cg) = (c.clone(), c.clone(), c.clone());
    let h = half.clone();
    out.push(
        polynomial(
            "cheb_tt_squared",
            "∑ t_{2rk} t_{2r(n−k)} = (n+1)(t_{rn}² − 1/2) + (1/2)u_{2r(n+1)−1}/u_{2r−1}",
            td,
            move |r, n| pconv(&c1, t, t, 2 * r, n),
            move |r, n| {
                let trn = c2.t(r * n);
                let sq = &(&trn * &trn) - &Poly::constant(h.clone());
                let quot = c2.u(2 * r * (n + 1) - 1).exact_div(&c2.u(2 * r - 1))?;
                Ok(&sq.scale(&int(n + 1)) + &quot.scale(&h))
            },
        )
        .with_guard(nonzero("u_{2r−1}(x)", move |r| cg.u(2 * r - 1)))
        .with_tags(&tags),
    );

    let (c1, c2) = (c.clone(), c.clone());
    let h = half.clone();
    out.push(
        polynomial(
            "cheb_tu_printed",
            "∑ t_{rk} u_{r(n−k)} = x(n+1)/(λ+γ) · u_{rn}, with λ + γ = 2x",
            ap,
            move |r, n| pconv(&c1, t, u, r, n),
            move |r, n| Ok(c2.u(r * n).scale(&(int(n + 1) * h.clone()))),
        )
        .with_tags(&["chebyshev", "as-printed"]),
    );
    let (c1, c2) = (c.clone(), c.clone());
    out.push(
        polynomial(
            "cheb_tu_squared_printed",
            "∑ t_{2rk} u_{2r(n−k)} = (n+1)t_{rn} u_{rn}",
            ap,
            move |r, n| pconv(&c1, t, u, 2 * r, n),
            move |r, n| Ok((&c2.t(r * n) * &c2.u(r * n)).scale(&int(n + 1))),
        )
        .with_tags(&["chebyshev", "as-printed"]),
    );
}

fn horadam_entry(id: &str, statement: &str, pair: HoradamPair<Rational>, tags: &[&str]) -> IdentityEntry {
    let pair = Arc::new(pair);
    let (p1, p2, pg) = (pair.clone(), pair.clone(), pair);
    let guard: Guard = Arc::new(move |r, _| pg.gamma(r).is_zero().then(|| "γ(r) = 0".to_string()));
    let mut all = vec!["horadam"];
    all.extend_from_slice(tags);
    rational(
        id,
        statement,
        Provenance::TheoremDerived,
        move |r, n| p1.gamma(r) * p1.convolution(r, n),
        move |r, n| p2.rhs(r, n),
    )
    .with_guard(guard)
    .with_tags(&all)
}

fn general(x: &str, y: &str) -> String {
    format!("γ(r) ∑ {x}_{{rk}} {y}_{{r(n−k)}} = four-term general Horadam form")
}

fn horadam_seq(a: Rational, b: Rational, p: Rational, q: Rational) -> Seq {
    Arc::new(Horadam::new(HoradamParams::new(a, b, p, q).expect("non-zero p, q")))
}

fn horadam_pairs(s: &Seqs, out: &mut Vec<IdentityEntry>) {
    let pair = |x: &Seq, y: &Seq| HoradamPair::new(x.clone(), y.clone());
    let named = [
        (
            "horadam_lucas_jacobsthal",
            "L",
            "J",
            &s.l,
            &s.jb,
            &["lucas-jacobsthal"][..],
        ),
        ("horadam_fib_pell", "F", "P", &s.f, &s.p, &["fib-pell"][..]),
        ("horadam_pell_jacobsthal", "P", "J", &s.p, &s.jb, &["first-kind"][..]),
        ("horadam_fib_jacobsthal", "F", "J", &s.f, &s.jb, &["first-kind"][..]),
        ("horadam_fib_balancing", "F", "B", &s.f, &s.b, &["first-kind"][..]),
        (
            "horadam_lucas_jacobsthal_lucas",
            "L",
            "j",
            &s.l,
            &s.jl,
            &["second-kind"][..],
        ),
        (
            "horadam_pell_lucas_jacobsthal_lucas",
            "Q",
            "j",
            &s.q,
            &s.jl,
            &["second-kind"][..],
        ),
        ("horadam_lucas_pell_lucas", "L", "Q", &s.l, &s.q, &["second-kind"][..]),
        ("horadam_lucas_balancing_pell", "C", "P", &s.c, &s.p, &[][..]),
    ];
    for (id, xs, ys, x, y, tags) in named {
        out.push(horadam_entry(id, &general(xs, ys), pair(x, y), tags));
    }

    let h = |a: i64, b: i64, p: i64, q: i64| horadam_seq(int(a), int(b), int(p), int(q));
    let fixed = [
        ("horadam_mixed_a", h(1, 3, 2, -3), h(-2, 1, 1, 4)),
        ("horadam_mixed_b", h(2, -1, 3, 5), h(0, 4, -1, -1)),
        ("horadam_mixed_c", h(-3, 2, -2, -5), h(5, 5, 4, 3)),
        ("horadam_mixed_d", h(1, 1, 1, 1), h(4, -5, 5, -2)),
        (
            "horadam_mixed_rational",
            horadam_seq(frac(1, 2), frac(-2, 3), frac(3, 2), frac(-1, 4)),
            horadam_seq(int(2), frac(1, 3), frac(-1, 2), int(2)),
        ),
    ];
    for (id, x, y) in fixed {
        let st = format!(
            "{}, X = w({:?}), Y = w({:?})",
            general("X", "Y"),
            tuple(x.params()),
            tuple(y.params())
        );
        out.push(horadam_entry(id, &st, HoradamPair::new(x, y), &["mixed"]));
    }

    out.push(
        horadam_entry(
            "horadam_fib_lucas_shared_roots",
            &general("F", "L"),
            pair(&s.f, &s.l),
            &["degenerate"],
        )
        .with_note("both sequences share their characteristic roots, so γ(r) = 0 for every r"),
    );
}

fn tuple(p: &HoradamParams<Rational>) -> (String, String, String, String) {
    (p.a.to_string(), p.b.to_string(), p.p.to_string(), p.q.to_string())
}

/// Four-term form with caller-supplied normalizer and right-hand side,
/// guarded on the normalizer.
fn printed_pair(
    id: &str,
    statement: &str,
    x: &Seq,
    y: &Seq,
    gamma: impl Fn(i64) -> Rational + Send + Sync + 'static,
    rhs: impl Fn(i64, i64) -> Rational + Send + Sync + 'static,
    tags: &[&str],
) -> IdentityEntry {
    let gamma = Arc::new(gamma);
    let (g1, gg) = (gamma.clone(), gamma);
    let (x, y) = (x.clone(), y.clone());
    let mut all = vec!["as-printed"];
    all.extend_from_slice(tags);
    rational(
        id,
        statement,
        Provenance::AsPrinted,
        move |r, n| g1(r) * conv(&x, &y, r, n),
        rhs,
    )
    .with_guard(Arc::new(move |r, _| gg(r).is_zero().then(|| "γ(r) = 0".to_string())))
    .with_tags(&all)
}

/// `c·∑ X_{rk} Y_{r(n−k)} = rhs(n)` at one fixed stride.
#[allow(clippy::too_many_arguments)]
fn printed_example(
    id: &str,
    statement: &str,
    stride: i64,
    c: i64,
    x: &Seq,
    y: &Seq,
    rhs: impl Fn(i64) -> Rational + Send + Sync + 'static,
    tags: &[&str],
) -> IdentityEntry {
    let (x, y) = (x.clone(), y.clone());
    let mut all = vec!["as-printed"];
    all.extend_from_slice(tags);
    rational(
        id,
        statement,
        Provenance::AsPrinted,
        move |r, n| int(c) * conv(&x, &y, r, n),
        move |_, n| rhs(n),
    )
    .at_stride(stride)
    .with_tags(&all)
}

/// General first-kind form (`U_X(0) = U_Y(0) = 0`).
#[allow(clippy::too_many_arguments)]
fn first_kind_rhs(ux: &Seq, uy: &Seq, vx: &Seq, vy: &Seq, qx: i64, qy: i64, r: i64, n: i64) -> Rational {
    let (qxr, qyr) = (pw(qx, r), pw(qy, r));
    qxr.clone() * ux.at(r * n) * (vx.at(r) * uy.at(r) - uy.at(2 * r))
        - ux.at(r * (n + 1))
            * ((qxr - vx.at(r) * vy.at(r) + vy.at(2 * r)) * uy.at(r) + vx.at(r) * uy.at(2 * r) - uy.at(3 * r))
        + qyr.clone() * uy.at(r * n) * (vy.at(r) * ux.at(r) - ux.at(2 * r))
        - uy.at(r * (n + 1))
            * ((qyr - vy.at(r) * vx.at(r) + vx.at(2 * r)) * ux.at(r) + vy.at(r) * ux.at(2 * r) - ux.at(3 * r))
}

/// General second-kind form (`V_X(0) = V_Y(0) = 2`).
fn second_kind_rhs(vx: &Seq, vy: &Seq, qx: i64, qy: i64, r: i64, n: i64) -> Rational {
    let (qxr, qyr) = (pw(qx, r), pw(qy, r));
    let cx = qxr.clone() - vx.at(r) * vy.at(r) + vy.at(2 * r);
    let cy = qyr.clone() - vy.at(r) * vx.at(r) + vx.at(2 * r);
    qxr * vx.at(r * n) * (int(2) * cx.clone() + vx.at(r) * vy.at(r) - vy.at(2 * r))
        - vx.at(r * (n + 1)) * (cx * vy.at(r) + vx.at(r) * vy.at(2 * r) - vy.at(3 * r))
        + qyr * vy.at(r * n) * (int(2) * cy.clone() + vy.at(r) * vx.at(r) - vx.at(2 * r))
        - vy.at(r * (n + 1)) * (cy * vx.at(r) + vy.at(r) * vx.at(2 * r) - vx.at(3 * r))
}

fn general_gamma(qx: i64, qy: i64, vx: &Seq, vy: &Seq) -> impl Fn(i64) -> Rational + Send + Sync + 'static {
    let (vx, vy) = (vx.clone(), vy.clone());
    move |r| super::gamma_general(&int(qx), &int(qy), |i| vx.at(i), |i| vy.at(i), r)
}

fn as_printed_horadam(s: &Seqs, out: &mut Vec<IdentityEntry>) {
    let sg = |r: i64| pw(-1, r);

    // Lucas and Jacobsthal.
    let (l, jl) = (s.l.clone(), s.jl.clone());
    let (l2, jb2, jl2) = (s.l.clone(), s.jb.clone(), s.jl.clone());
    out.push(printed_pair(
        "lucas_jacobsthal_printed",
        "γ(r) ∑ L_{rk} J_{r(n−k)} = (−1)^r(L_r − j_r)L_{rn}J_r − (((−1)^r + j_{2r})J_r − J_{3r})L_{r(n+1)} \
         + (−1)^r 2^r J_{rn}((−1)^r 2^{r+1} − L_r j_r + L_{2r}) − (−1)^r J_{r(n+1)}((L_r − 2)j_r + (1 − (−1)^r)L_r), \
         γ(r) = j_{2r}(1 + (−1)^r) + (−1)^r 2^r L_r(L_r − j_r) − (−1)^r L_r j_r",
        &s.l,
        &s.jb,
        move |r| {
            let s = sg(r);
            jl.at(2 * r) * (int(1) + s.clone()) + s.clone() * pw(2, r) * l.at(r) * (l.at(r) - jl.at(r))
                - s * l.at(r) * jl.at(r)
        },
        move |r, n| {
            let (s, l, jb, jl) = (sg(r), &l2, &jb2, &jl2);
            s.clone() * (l.at(r) - jl.at(r)) * l.at(r * n) * jb.at(r)
                - ((s.clone() + jl.at(2 * r)) * jb.at(r) - jb.at(3 * r)) * l.at(r * (n + 1))
                + s.clone() * pw(2, r) * jb.at(r * n) * (s.clone() * pw(2, r + 1) - l.at(r) * jl.at(r) + l.at(2 * r))
                - s.clone() * jb.at(r * (n + 1)) * ((l.at(r) - int(2)) * jl.at(r) + (int(1) - s) * l.at(r))
        },
        &["lucas-jacobsthal"],
    ));
    let (jl1, l1) = (s.jl.clone(), s.l.clone());
    out.push(printed_example(
        "lucas_jacobsthal_r1",
        "∑ L_k J_{n−k} = j_{n+1} − L_{n+1}",
        1,
        1,
        &s.l,
        &s.jb,
        move |n| jl1.at(n + 1) - l1.at(n + 1),
        &["lucas-jacobsthal"],
    ));
    let (jb1, f1) = (s.jb.clone(), s.f.clone());
    out.push(printed_example(
        "lucas_jacobsthal_r2",
        "∑ L_{2k} J_{2n−2k} = J_{2n+2} − F_{2n+2}",
        2,
        1,
        &s.l,
        &s.jb,
        move |n| jb1.at(2 * n + 2) - f1.at(2 * n + 2),
        &["lucas-jacobsthal"],
    ));
    let (jb1, l1) = (s.jb.clone(), s.l.clone());
    out.push(printed_example(
        "lucas_jacobsthal_r3",
        "∑ L_{3k} J_{3n−3k} = (11J_{3n+3} + 104J_{3n})/62 − (3/124)(7L_{3n+3} − 3L_{3n})",
        3,
        1,
        &s.l,
        &s.jb,
        move |n| {
            frac(1, 62) * (int(11) * jb1.at(3 * n + 3) + int(104) * jb1.at(3 * n))
                - frac(3, 124) * (int(7) * l1.at(3 * n + 3) - int(3) * l1.at(3 * n))
        },
        &["lucas-jacobsthal"],
    ));

    // Fibonacci and Pell.
    let (l1, q1) = (s.l.clone(), s.q.clone());
    let (f2, l2, p2, q2) = (s.f.clone(), s.l.clone(), s.p.clone(), s.q.clone());
    out.push(
        printed_pair(
            "fib_pell_printed",
            "γ(r) ∑ F_{rk} P_{r(n−k)} = (−1)^r F_{rn}(L_r P_r − P_{2r}) − F_{r(n+1)}(((−1)^r − L_r Q_r + Q_{2r})P_r + L_r P_{2r} − P_{3r}) \
             + (−1)^r P_{rn}(Q_r F_r − F_{2r}) − P_{r(n+1)}(((−1)^r − Q_r L_r + L_{2r})F_r + Q_r F_{2r} − F_{3r}), \
             γ(r) = 2 − 2(−1)^r L_r Q_r + (−1)^r Q_{2r} + (−2)^r L_r²",
            &s.f,
            &s.p,
            move |r| {
                let s = sg(r);
                int(2) - int(2) * s.clone() * l1.at(r) * q1.at(r) + s * q1.at(2 * r)
                    + pw(-2, r) * l1.at(r) * l1.at(r)
            },
            move |r, n| {
                let (s, f, l, p, q) = (sg(r), &f2, &l2, &p2, &q2);
                s.clone() * f.at(r * n) * (l.at(r) * p.at(r) - p.at(2 * r))
                    - f.at(r * (n + 1))
                        * ((s.clone() - l.at(r) * q.at(r) + q.at(2 * r)) * p.at(r) + l.at(r) * p.at(2 * r)
                            - p.at(3 * r))
                    + s.clone() * p.at(r * n) * (q.at(r) * f.at(r) - f.at(2 * r))
                    - p.at(r * (n + 1))
                        * ((s - q.at(r) * l.at(r) + l.at(2 * r)) * f.at(r) + q.at(r) * f.at(2 * r)
                            - f.at(3 * r))
            },
            &["fib-pell"],
        )
        .with_note("the general normalizer has (−1)^r L_r² where this one has (−2)^r L_r²"),
    );
    let (p1, f1) = (s.p.clone(), s.f.clone());
    out.push(printed_example(
        "fib_pell_r1",
        "∑ F_k P_{n−k} = P_n − F_n",
        1,
        1,
        &s.f,
        &s.p,
        move |n| p1.at(n) - f1.at(n),
        &["fib-pell"],
    ));
    let (p1, f1) = (s.p.clone(), s.f.clone());
    out.push(printed_example(
        "fib_pell_r2",
        "12 ∑ F_{2k} P_{2n−2k} = P_{2n} − 2F_{2n}",
        2,
        12,
        &s.f,
        &s.p,
        move |n| p1.at(2 * n) - int(2) * f1.at(2 * n),
        &["fib-pell"],
    ));
    let (p1, f1) = (s.p.clone(), s.f.clone());
    out.push(printed_example(
        "fib_pell_r3",
        "106 ∑ F_{3k} P_{3n−3k} = 10P_{3n} − 25F_{3n}",
        3,
        106,
        &s.f,
        &s.p,
        move |n| int(10) * p1.at(3 * n) - int(25) * f1.at(3 * n),
        &["fib-pell"],
    ));
    let (f1, p1, f2, p2, l2, q2) = (
        s.f.clone(),
        s.p.clone(),
        s.f.clone(),
        s.p.clone(),
        s.l.clone(),
        s.q.clone(),
    );
    let (lg, qg) = (s.l.clone(), s.q.clone());
    out.push(
        rational(
            "fib_pell_shifted",
            "∑ F_{r(k+1)} P_{r(n+1−k)} = (F_r P_{r(n+2)} − P_r F_{r(n+2)})/(2Q_r − L_r)",
            Provenance::AsPrinted,
            move |r, n| convolve(|i| f1.at(i + r), |i| p1.at(i + r), r, n),
            move |r, n| {
                (f2.at(r) * p2.at(r * (n + 2)) - p2.at(r) * f2.at(r * (n + 2))) / (int(2) * q2.at(r) - l2.at(r))
            },
        )
        .with_guard(nonzero("2Q_r − L_r", move |r| int(2) * qg.at(r) - lg.at(r)))
        .with_note("shifted-index Fibonacci-Pell convolution quoted from the literature")
        .with_tags(&["as-printed", "fib-pell"]),
    );

    // General first- and second-kind forms, instantiated.
    let first = [
        (
            "first_kind_printed_pell_jacobsthal",
            "P",
            "J",
            &s.p,
            &s.jb,
            &s.q,
            &s.jl,
            -1,
            -2,
        ),
        (
            "first_kind_printed_fib_balancing",
            "F",
            "B",
            &s.f,
            &s.b,
            &s.l,
            &s.c,
            -1,
            1,
        ),
    ];
    for (id, xs, ys, ux, uy, vx, vy, qx, qy) in first {
        // V(6, 1) = 2C, the second-kind companion of balancing.
        let vy: Seq = if qy == 1 {
            Arc::new(Horadam::new(uy.params().companion_v()))
        } else {
            vy.clone()
        };
        let (ux1, uy1, vx1, vy1) = (ux.clone(), uy.clone(), vx.clone(), vy.clone());
        out.push(printed_pair(
            id,
            &format!("general first-kind form with U_X = {xs}, U_Y = {ys}"),
            ux,
            uy,
            general_gamma(qx, qy, vx, &vy),
            move |r, n| first_kind_rhs(&ux1, &uy1, &vx1, &vy1, qx, qy, r, n),
            &["first-kind"],
        ));
    }
    let (l1, jl1) = (s.l.clone(), s.jl.clone());
    out.push(printed_pair(
        "second_kind_printed_lucas_jacobsthal_lucas",
        "general second-kind form with V_X = L, V_Y = j",
        &s.l,
        &s.jl,
        general_gamma(-1, -2, &s.l, &s.jl),
        move |r, n| second_kind_rhs(&l1, &jl1, -1, -2, r, n),
        &["second-kind"],
    ));

    // Pell and Jacobsthal.
    let pj_gamma = |qq: Seq, jl: Seq| {
        move |r: i64| {
            let (s, t) = (sg(r), pw(-2, r));
            int(1) + pw(4, r) - (s.clone() + t.clone()) * qq.at(r) * jl.at(r)
                + s * jl.at(2 * r)
                + t * qq.at(r) * qq.at(r)
        }
    };
    let (p2, jb2, q2, jl2) = (s.p.clone(), s.jb.clone(), s.q.clone(), s.jl.clone());
    out.push(
        printed_pair(
            "pell_jacobsthal_printed",
            "γ(r) ∑ P_{rk} J_{r(n−k)} = (−1)^r P_{rn}(Q_r J_r − J_{2r}) − P_{r(n+1)}(((−1)^r − Q_r j_r + j_{2r})J_{2r} + Q_r J_{2r} − J_{3r}) \
             + (−2)^r J_{rn}(j_r P_r − P_{2r}) − J_{r(n+1)}(((−2)^r − j_r Q_r + Q_{2r})P_r + j_r P_{2r} − P_{3r}), \
             γ(r) = 1 + 4^r − ((−1)^r + (−2)^r)Q_r j_r + (−1)^r j_{2r} + (−2)^r Q_r²",
            &s.p,
            &s.jb,
            pj_gamma(s.q.clone(), s.jl.clone()),
            move |r, n| {
                let (s, t, p, jb, q, jl) = (sg(r), pw(-2, r), &p2, &jb2, &q2, &jl2);
                s.clone() * p.at(r * n) * (q.at(r) * jb.at(r) - jb.at(2 * r))
                    - p.at(r * (n + 1))
                        * ((s - q.at(r) * jl.at(r) + jl.at(2 * r)) * jb.at(2 * r) + q.at(r) * jb.at(2 * r)
                            - jb.at(3 * r))
                    + t.clone() * jb.at(r * n) * (jl.at(r) * p.at(r) - p.at(2 * r))
                    - jb.at(r * (n + 1))
                        * ((t - jl.at(r) * q.at(r) + q.at(2 * r)) * p.at(r) + jl.at(r) * p.at(2 * r)
                            - p.at(3 * r))
            },
            &["first-kind"],
        )
        .with_note("the general first-kind form has J_r where this one has J_{2r} in the second term"),
    );
    let (p1, jb1) = (s.p.clone(), s.jb.clone());
    out.push(printed_example(
        "pell_jacobsthal_r1",
        "2 ∑ P_k J_{n−k} = 2J_n − J_{n+1} − P_n − P_{n+1}",
        1,
        2,
        &s.p,
        &s.jb,
        move |n| int(2) * jb1.at(n) - jb1.at(n + 1) - p1.at(n) - p1.at(n + 1),
        &["first-kind"],
    ));
    let (p1, jb1) = (s.p.clone(), s.jb.clone());
    out.push(printed_example(
        "pell_jacobsthal_r2",
        "28 ∑ P_{2k} J_{2n−2k} = P_{2n} + 51P_{2n+2} − 6J_{2n+2} − 8J_{2n}",
        2,
        28,
        &s.p,
        &s.jb,
        move |n| p1.at(2 * n) + int(51) * p1.at(2 * n + 2) - int(6) * jb1.at(2 * n + 2) - int(8) * jb1.at(2 * n),
        &["first-kind"],
    ));
    let (p1, jb1) = (s.p.clone(), s.jb.clone());
    out.push(printed_example(
        "pell_jacobsthal_r3",
        "686 ∑ P_{3k} J_{3n−3k} = 21P_{3n} − 591P_{3n+3} − 35J_{3n+3} − 280J_{3n}",
        3,
        686,
        &s.p,
        &s.jb,
        move |n| {
            int(21) * p1.at(3 * n)
                - int(591) * p1.at(3 * n + 3)
                - int(35) * jb1.at(3 * n + 3)
                - int(280) * jb1.at(3 * n)
        },
        &["first-kind"],
    ));

    // Lucas and Jacobsthal-Lucas.
    let (l2, jl2) = (s.l.clone(), s.jl.clone());
    out.push(printed_pair(
        "lucas_jacobsthal_lucas_printed",
        "γ(r) ∑ L_{rk} j_{r(n−k)} = (−1)^r L_{rn}(2((−1)^r − L_r j_r + j_{2r}) + L_r j_r − j_{2r}) \
         − L_{r(n+1)}(((−1)^r − L_r j_r + j_{2r})j_r + L_r j_{2r} − j_{3r}) \
         + (−2)^r j_{rn}(2((−2)^r − j_r L_r + L_{2r})j_r L_r − L_{2r}) \
         − j_{r(n+1)}(((−2)^r − j_r L_r + L_{2r})L_r + j_r L_{2r} − L_{3r}), \
         γ(r) = 1 + 4^r − ((−1)^r + (−2)^r)L_r j_r + (−1)^r j_{2r} + (−2)^r L_r²",
        &s.l,
        &s.jl,
        pj_gamma(s.l.clone(), s.jl.clone()),
        move |r, n| {
            let (s, t, l, jl) = (sg(r), pw(-2, r), &l2, &jl2);
            let cx = s.clone() - l.at(r) * jl.at(r) + jl.at(2 * r);
            let cy = t.clone() - jl.at(r) * l.at(r) + l.at(2 * r);
            s * l.at(r * n) * (int(2) * cx.clone() + l.at(r) * jl.at(r) - jl.at(2 * r))
                - l.at(r * (n + 1)) * (cx * jl.at(r) + l.at(r) * jl.at(2 * r) - jl.at(3 * r))
                + t * jl.at(r * n) * (int(2) * cy.clone() * jl.at(r) * l.at(r) - l.at(2 * r))
                - jl.at(r * (n + 1)) * (cy * l.at(r) + jl.at(r) * l.at(2 * r) - l.at(3 * r))
        },
        &["second-kind"],
    ));
    let (l1, jl1) = (s.l.clone(), s.jl.clone());
    out.push(printed_example(
        "lucas_jacobsthal_lucas_r1",
        "∑ L_k j_{n−k} = 4j_n + j_{n+1} − 2L_n − L_{n+1}",
        1,
        1,
        &s.l,
        &s.jl,
        move |n| int(4) * jl1.at(n) + jl1.at(n + 1) - int(2) * l1.at(n) - l1.at(n + 1),
        &["second-kind"],
    ));
    let (l1, jl1) = (s.l.clone(), s.jl.clone());
    out.push(printed_example(
        "lucas_jacobsthal_lucas_r2",
        "5 ∑ L_{2k} j_{2n−2k} = 5j_{2n+2} + L_{2n+2} − 4L_{2n}",
        2,
        5,
        &s.l,
        &s.jl,
        move |n| int(5) * jl1.at(2 * n + 2) + l1.at(2 * n + 2) - int(4) * l1.at(2 * n),
        &["second-kind"],
    ));
    let (l1, jl1) = (s.l.clone(), s.jl.clone());
    out.push(printed_example(
        "lucas_jacobsthal_lucas_r3",
        "140 ∑ L_{3k} j_{3n−3k} = 35L_{3n} + L_{3n+3} + 42j_{3n+3} − 176j_{3n}",
        3,
        140,
        &s.l,
        &s.jl,
        move |n| int(35) * l1.at(3 * n) + l1.at(3 * n + 3) + int(42) * jl1.at(3 * n + 3) - int(176) * jl1.at(3 * n),
        &["second-kind"],
    ));
}

fn weighted(s: &Seqs, out: &mut Vec<IdentityEntry>) {
    let pairs = [("fib_lucas", 1, -1), ("jacobsthal", 1, -2)];
    for w in WeightFamily::ALL {
        let guard: Guard =
            Arc::new(move |_, n| (!w.in_domain(n)).then(|| format!("outside domain of weight `{}`", w.id())));
        for (label, p, q) in pairs {
            let pair = Arc::new(LucasPair::new(int(p), int(q)).expect("non-zero parameters"));
            let ctx = WeightContext::default()
                .with_lucas(pair.clone())
                .with_chebyshev(s.cheb.clone());
            let c1 = ctx.clone();
            let lhs: Side = Arc::new(move |r, n| {
                let ctx = c1.clone().with_r(r);
                let (u, v) = (&pair.u, &pair.v);
                Ok(weighted_convolve(
                    w,
                    &ctx,
                    |i| ExactScalar::Rational(u.at(i)),
                    |i| ExactScalar::Rational(v.at(i)),
                    r,
                    n,
                )?)
            });
            let rhs: Side = Arc::new(move |r, n| Ok(carlitz_rhs(w, &ctx, r, n, CarlitzVariant::Lucas)?));
            let domain = if w.is_polynomial() {
                ScalarDomain::Polynomial
            } else {
                ScalarDomain::Rational
            };
            out.push(
                IdentityEntry::new(
                    format!("weighted_{}_{label}", w.id()),
                    format!(
                        "∑ T(n,k) U_{{rk}} V_{{r(n−k)}} = U_{{rn}} ∑ T(n,k), T(n,k) = {}, (p, q) = ({p}, {q})",
                        w.formula()
                    ),
                    domain,
                    Provenance::TheoremDerived,
                    lhs,
                    rhs,
                )
                .with_guard(guard.clone())
                .with_tags(&["symmetric-weight", "lucas"]),
            );
        }

        // U·U and V·V weights in this variant come from the Fibonacci pair.
        let fib = LucasPair::new(int(1), int(-1)).expect("non-zero parameters");
        let ctx = WeightContext::default()
            .with_lucas(Arc::new(fib))
            .with_chebyshev(s.cheb.clone());
        let (c1, cheb) = (ctx.clone(), s.cheb.clone());
        let lhs: Side = Arc::new(move |r, n| {
            let ctx = c1.clone().with_r(r);
            Ok(weighted_convolve(
                w,
                &ctx,
                |i| ExactScalar::Poly(cheb.u(i - 1)),
                |i| ExactScalar::Poly(cheb.t(i)),
                r,
                n,
            )?)
        });
        let rhs: Side = Arc::new(move |r, n| Ok(carlitz_rhs(w, &ctx, r, n, CarlitzVariant::Chebyshev)?));
        out.push(
            IdentityEntry::new(
                format!("weighted_{}_chebyshev", w.id()),
                format!(
                    "∑ T(n,k) u_{{rk−1}} t_{{r(n−k)}} = (u_{{rn−1}}/2) ∑ T(n,k), T(n,k) = {}",
                    w.formula()
                ),
                ScalarDomain::Polynomial,
                Provenance::TheoremDerived,
                lhs,
                rhs,
            )
            .with_guard(guard)
            .with_tags(&["symmetric-weight", "chebyshev"]),
        );
    }
}
