//! Multivariate gcd over a field by recursive content / primitive-part
//! reduction to a pseudo-remainder sequence in the top variable.
//! Results are monic-normalized under the ring order.

use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Degree in the single variable `v`.
fn deg_v(p: &Polynomial, v: usize) -> u32 {
    p.terms().iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
}

/// Coefficient of `v^e`, as a polynomial free of `v`.
fn coeff_at(p: &Polynomial, v: usize, e: u32) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .filter(|(m, _)| m.exp(v) == e)
        .map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps[v] = 0;
            (Monomial::new(exps), c.clone())
        })
        .collect();
    p.ring().from_terms(terms)
}

/// Monomial dividing every term.
fn monomial_content(p: &Polynomial) -> Monomial {
    let mut it = p.terms().iter();
    let first = it.next().expect("nonzero polynomial").0.clone();
    it.fold(first, |acc, (m, _)| acc.gcd(m))
}

/// Content with respect to `v`: gcd of the `v`-coefficients.
fn content_v(p: &Polynomial, v: usize) -> Polynomial {
    let ring = p.ring().clone();
    let mut acc = ring.zero();
    for e in 0..=deg_v(p, v) {
        let c = coeff_at(p, v, e);
        if !c.is_zero() {
            acc = gcd_raw(&acc, &c);
            if acc.is_constant() && !acc.is_zero() {
                return ring.one();
            }
        }
    }
    acc
}

/// Pseudo-remainder of `f` by `g` in the variable `v` (`g` nonzero in `v`).
fn prem_v(f: &Polynomial, g: &Polynomial, v: usize) -> Polynomial {
    let ring = f.ring().clone();
    let dg = deg_v(g, v);
    let lc_g = coeff_at(g, v, dg);
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = deg_v(&r, v);
        if dr < dg {
            break;
        }
        let lc_r = coeff_at(&r, v, dr);
        let shift = ring.monomial(Monomial::var(ring.nvars(), v), ring.field().one()).pow(dr - dg);
        r = r.mul(&lc_g).sub(&g.mul(&lc_r).mul(&shift));
    }
    r
}

/// gcd up to a unit (not monic-normalized).
fn gcd_raw(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let ring = a.ring().clone();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return ring.one();
    }
    // split off the common monomial factor first; it does the whole job
    // on monomial-heavy inputs and keeps the recursion small
    let ma = monomial_content(a);
    let mb = monomial_content(b);
    let mg = ma.gcd(&mb);
    let a1 = a
        .div_exact(&ring.monomial(ma, ring.field().one()))
        .unwrap();
    let b1 = b
        .div_exact(&ring.monomial(mb, ring.field().one()))
        .unwrap();
    let core = gcd_core(&a1, &b1);
    core.mul(&ring.monomial(mg, ring.field().one()))
}

fn gcd_core(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let ring = a.ring().clone();
    if a.is_constant() || b.is_constant() {
        return ring.one();
    }
    // top variable present in either operand
    let v = (0..ring.nvars())
        .rev()
        .find(|&v| deg_v(a, v) > 0 || deg_v(b, v) > 0)
        .expect("non-constant operands");
    if deg_v(a, v) == 0 || deg_v(b, v) == 0 {
        // one operand is free of v: gcd divides its v-content
        let (free, other) = if deg_v(a, v) == 0 { (a, b) } else { (b, a) };
        return gcd_raw(free, &content_v(other, v));
    }
    let cont_a = content_v(a, v);
    let cont_b = content_v(b, v);
    let pp_a = a.div_exact(&cont_a).expect("content divides");
    let pp_b = b.div_exact(&cont_b).expect("content divides");
    let g_cont = gcd_raw(&cont_a, &cont_b);

    let (mut f, mut g) = if deg_v(&pp_a, v) >= deg_v(&pp_b, v) {
        (pp_a, pp_b)
    } else {
        (pp_b, pp_a)
    };
    loop {
        let r = prem_v(&f, &g, v);
        if r.is_zero() {
            break;
        }
        let c = content_v(&r, v);
        let r = r.div_exact(&c).expect("content divides");
        f = g;
        g = r;
    }
    if deg_v(&g, v) == 0 {
        // coprime in v: only the content survives
        return g_cont;
    }
    g_cont.mul(&g)
}

/// A greatest common divisor, monic-normalized; zero iff both inputs zero.
pub fn gcd_multivariate(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert!(a.ring().compatible(b.ring()));
    let g = gcd_raw(a, b);
    if g.is_zero() {
        g
    } else {
        g.monic()
    }
}

/// Fold [`gcd_multivariate`] over a list; zero for an empty or all-zero list.
pub fn gcd_many(polys: &[Polynomial], ring: &PolyRing) -> Polynomial {
    let mut acc = ring.zero();
    for p in polys {
        acc = gcd_multivariate(&acc, p);
        if acc.is_constant() && !acc.is_zero() {
            return ring.one();
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::monomial::MonomialOrder;
    use crate::text::parse_poly;

    fn ring(chr: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            FieldSpec::new(chr).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn monomial_min_exponents() {
        let r = ring(0, &["Y0", "Y1"]);
        let a = parse_poly("Y0^2*Y1", &r).unwrap();
        let b = parse_poly("Y0*Y1^2", &r).unwrap();
        assert_eq!(gcd_multivariate(&a, &b), parse_poly("Y0*Y1", &r).unwrap());
    }

    #[test]
    fn factorable_by_inspection() {
        let r = ring(0, &["Y0", "Y1"]);
        let a = parse_poly("Y0^2 - Y1^2", &r).unwrap();
        let b = parse_poly("Y0 + Y1", &r).unwrap();
        assert_eq!(gcd_multivariate(&a, &b), b);
    }

    #[test]
    fn folded_over_list() {
        let r = ring(0, &["Y0", "Y1", "Y2"]);
        let polys: Vec<_> = ["Y0^2", "Y0*Y1", "Y0*Y2"]
            .iter()
            .map(|s| parse_poly(s, &r).unwrap())
            .collect();
        assert_eq!(gcd_many(&polys, &r), parse_poly("Y0", &r).unwrap());
    }

    #[test]
    fn zero_handling() {
        let r = ring(0, &["Y0"]);
        let z = r.zero();
        assert!(gcd_multivariate(&z, &z).is_zero());
        let p = parse_poly("2*Y0", &r).unwrap();
        assert_eq!(gcd_multivariate(&z, &p), parse_poly("Y0", &r).unwrap());
    }

    #[test]
    fn gcd_divides_and_cofactors_coprime() {
        let r = ring(32003, &["X0", "X1", "X2"]);
        let samples = [
            ("X0^2*X1 + X0*X1^2", "X0*X1*X2 + X1^2*X2"),
            ("X0^3 - X1^3", "X0^2 - X1^2"),
            ("X0*X2 + X2^2", "X0^2 - X2^2"),
            ("X0^2 + X1", "X1^2 + X2"),
        ];
        for (sa, sb) in samples {
            let a = parse_poly(sa, &r).unwrap();
            let b = parse_poly(sb, &r).unwrap();
            let g = gcd_multivariate(&a, &b);
            let qa = a.div_exact(&g).expect("gcd divides a");
            let qb = b.div_exact(&g).expect("gcd divides b");
            assert!(gcd_multivariate(&qa, &qb).is_constant());
        }
    }

    #[test]
    fn char_two_gcd() {
        let r = ring(2, &["X0", "X1"]);
        // (X0+X1)^2 = X0^2+X1^2 in char 2
        let a = parse_poly("X0^2 + X1^2", &r).unwrap();
        let b = parse_poly("X0 + X1", &r).unwrap();
        assert_eq!(gcd_multivariate(&a, &b), b);
    }
}
