//! Gröbner engine and the ideal-theoretic subroutines the criterion needs:
//! reduced bases (Buchberger with Gebauer-Möller pair elimination and sugar
//! selection), normal forms, elimination, ideal quotient, equality, Krull
//! dimension, and fixed-degree linear algebra over the coefficient field.

use crate::field::Coeff;
use crate::linalg::KMatrix;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

/// An ideal: generators plus a reduced-basis cache keyed by order.
/// The cache is a pure accelerator; every result is independent of it.
#[derive(Debug)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    cache: RwLock<BTreeMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.read().unwrap().clone();
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: RwLock::new(cache),
        }
    }
}

impl Ideal {
    pub fn new(ring: PolyRing, gens: Vec<Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert!(g.ring().compatible(&ring), "generator outside the ring");
        }
        Ideal {
            ring,
            gens,
            cache: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn zero(ring: PolyRing) -> Self {
        Ideal::new(ring, Vec::new())
    }

    /// Build from a known reduced Gröbner basis under the ring's order,
    /// pre-seeding the cache.
    pub fn from_reduced_gb(ring: PolyRing, basis: Vec<Polynomial>) -> Self {
        let ideal = Ideal::new(ring.clone(), basis.clone());
        ideal
            .cache
            .write()
            .unwrap()
            .insert(ring.order().clone(), Arc::new(basis));
        ideal
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Gröbner basis under the ring's own order (cached).
    pub fn gb(&self) -> Arc<Vec<Polynomial>> {
        self.gb_under(self.ring.order().clone())
    }

    /// Reduced Gröbner basis under `order`; the returned polynomials live
    /// in `self.ring().reorder(order)`.
    pub fn gb_under(&self, order: MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(b) = self.cache.read().unwrap().get(&order) {
            return b.clone();
        }
        let ring = if *self.ring.order() == order {
            self.ring.clone()
        } else {
            self.ring.reorder(order.clone())
        };
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.with_order(&ring)).collect();
        let basis = Arc::new(groebner_basis(&gens, &ring));
        self.cache.write().unwrap().insert(order, basis.clone());
        basis
    }

    /// True when the unit ideal (reduced basis is `{1}`).
    pub fn is_unit(&self) -> bool {
        let gb = self.gb();
        gb.len() == 1 && gb[0].is_constant() && !gb[0].is_zero()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let gb = self.gb();
        normal_form(&p.with_order(&self.ring), &gb)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Mathematical equality by mutual normal-form reduction of generators.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g)) && other.gens.iter().all(|g| self.contains(g))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }
}

// ---- Buchberger ----

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn pair_sugar(basis: &[Polynomial], sugars: &[u32], i: usize, j: usize, lcm: &Monomial) -> u32 {
    let di = lcm.degree() - basis[i].leading_monomial().unwrap().degree();
    let dj = lcm.degree() - basis[j].leading_monomial().unwrap().degree();
    (sugars[i] + di).max(sugars[j] + dj)
}

/// Gebauer-Möller update: prune `pairs` against the new element at
/// `h` and append the surviving new pairs.
fn update_pairs(basis: &[Polynomial], sugars: &[u32], pairs: &mut Vec<Pair>, h: usize) {
    let lt_h = basis[h].leading_monomial().unwrap().clone();

    let lcm_with = |i: usize| basis[i].leading_monomial().unwrap().lcm(&lt_h);

    // candidate pairs (i, h), filtered by the Gebauer-Möller divisor tests
    let mut candidates: Vec<(usize, Monomial)> = (0..h).map(|i| (i, lcm_with(i))).collect();
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    while let Some((i, lcm_i)) = candidates.pop() {
        let coprime = basis[i]
            .leading_monomial()
            .unwrap()
            .is_coprime(&lt_h);
        let dominated = candidates.iter().any(|(_, l)| l.divides(&lcm_i))
            || kept.iter().any(|(_, l)| l.divides(&lcm_i));
        if coprime || !dominated {
            kept.push((i, lcm_i));
        }
    }

    // Buchberger's first criterion: drop coprime pairs
    kept.retain(|(i, _)| {
        !basis[*i]
            .leading_monomial()
            .unwrap()
            .is_coprime(&lt_h)
    });

    // prune old pairs made redundant by h
    pairs.retain(|p| {
        !(lt_h.divides(&p.lcm) && lcm_with(p.i) != p.lcm && lcm_with(p.j) != p.lcm)
    });

    kept.sort_by_key(|a| a.0);
    for (i, lcm) in kept {
        let sugar = pair_sugar(basis, sugars, i, h, &lcm);
        pairs.push(Pair {
            i,
            j: h,
            lcm,
            sugar,
        });
    }
}

/// Full normal form of `p` against `basis`: no term of the result is
/// divisible by any basis leading term. `normal_form(p) == 0` iff `p`
/// lies in the ideal the basis generates (when it is a Gröbner basis).
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = p.ring().clone();
    let field = ring.field().clone();
    let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
    let mut cur = p.clone();
    'outer: while let Some(lm) = cur.leading_monomial() {
        for g in basis {
            let glm = g.leading_monomial().expect("zero polynomial in basis");
            if glm.divides(lm) {
                let qm = glm.quotient_into(lm);
                let qc = field
                    .div(cur.leading_coeff().unwrap(), g.leading_coeff().unwrap())
                    .unwrap();
                cur = cur.sub(&g.mul_term(&qm, &qc));
                continue 'outer;
            }
        }
        rem.push((lm.clone(), cur.leading_coeff().unwrap().clone()));
        cur = cur.tail();
    }
    Polynomial::from_sorted_terms_unchecked(ring, rem)
}

/// Reduced Gröbner basis of `gens` under `ring`'s order: monic elements,
/// sorted by ascending leading monomial, no term of any element divisible
/// by another element's leading term.
pub fn groebner_basis(gens: &[Polynomial], ring: &PolyRing) -> Vec<Polynomial> {
    let ord = ring.order().clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = normal_form(g, &basis);
        if g.is_zero() {
            continue;
        }
        let sugar = g.total_degree().unwrap();
        basis.push(g);
        sugars.push(sugar);
        update_pairs(&basis, &sugars, &mut pairs, basis.len() - 1);
    }

    while !pairs.is_empty() {
        // sugar selection: min sugar, then min lcm, then lowest indices
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let better = match a.sugar.cmp(&b.sugar) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => match ord.cmp(&a.lcm, &b.lcm) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => (a.i, a.j) < (b.i, b.j),
                },
            };
            if better {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let (f, g) = (&basis[pair.i], &basis[pair.j]);
        let field = ring.field();
        let mf = f.leading_monomial().unwrap().quotient_into(&pair.lcm);
        let mg = g.leading_monomial().unwrap().quotient_into(&pair.lcm);
        let cf = field.inv(f.leading_coeff().unwrap()).unwrap();
        let cg = field.inv(g.leading_coeff().unwrap()).unwrap();
        let spoly = f.mul_term(&mf, &cf).sub(&g.mul_term(&mg, &cg));
        let reduced = normal_form(&spoly, &basis);
        if reduced.is_zero() {
            continue;
        }
        let sugar = pair.sugar.max(reduced.total_degree().unwrap());
        basis.push(reduced);
        sugars.push(sugar);
        update_pairs(&basis, &sugars, &mut pairs, basis.len() - 1);
    }

    reduce_basis(basis, ring)
}

/// Interreduce a Gröbner basis into the unique reduced one.
fn reduce_basis(mut basis: Vec<Polynomial>, ring: &PolyRing) -> Vec<Polynomial> {
    let ord = ring.order();
    // minimal basis: drop elements whose leading term another divides
    basis.sort_by(|a, b| ord.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }
    // tail reduction until stable
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let reduced = normal_form(&minimal[i], &others);
            if reduced != minimal[i] {
                minimal[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Polynomial> = minimal.into_iter().map(|g| g.monic()).collect();
    out.sort_by(|a, b| ord.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

// ---- Elimination ----

/// Generators of `ideal ∩ k[remaining variables]`, as an ideal of the
/// smaller ring (grevlex). Obtained from a block-elimination basis by
/// selecting the elements free of the dropped variables.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Ideal {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut dropped = vec![false; n];
    for &d in drop {
        dropped[d] = true;
    }
    // elimination ring: dropped block first, kept variables after
    let mut perm: Vec<usize> = Vec::with_capacity(n); // elim ring index -> original index
    for (i, &d) in dropped.iter().enumerate() {
        if d {
            perm.push(i);
        }
    }
    let split = perm.len();
    for (i, &d) in dropped.iter().enumerate() {
        if !d {
            perm.push(i);
        }
    }
    let elim_vars: Vec<String> = perm.iter().map(|&i| ring.vars()[i].clone()).collect();
    let elim_ring = PolyRing::new(
        elim_vars,
        ring.field().clone(),
        MonomialOrder::Block { split },
    )
    .unwrap();
    let mut var_map = vec![None; n]; // original index -> elim ring index
    for (e, &o) in perm.iter().enumerate() {
        var_map[o] = Some(e);
    }
    let gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.map_into(&elim_ring, &var_map))
        .collect();
    let gb = groebner_basis(&gens, &elim_ring);

    // target ring on the kept variables
    let kept: Vec<usize> = (0..n).filter(|i| !dropped[*i]).collect();
    let kept_vars: Vec<String> = kept.iter().map(|&i| ring.vars()[i].clone()).collect();
    let target = PolyRing::new(kept_vars, ring.field().clone(), MonomialOrder::GrevLex).unwrap();
    let mut back_map = vec![None; n]; // elim ring index -> target index
    for (t, &o) in kept.iter().enumerate() {
        back_map[var_map[o].unwrap()] = Some(t);
    }
    let selected: Vec<Polynomial> = gb
        .iter()
        .filter(|g| g.degree_in(0..split).unwrap_or(0) == 0)
        .map(|g| g.map_into(&target, &back_map))
        .collect();
    // the selection is already a Gröbner basis of the elimination ideal
    // under the induced grevlex; interreduce to the canonical form
    let out = reduce_basis(selected, &target);
    Ideal::new(target, out)
}

/// Intersection via the tag variable `u`: `(u·A + (1-u)·B) ∩ k[vars]`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    let ring = a.ring();
    assert!(ring.compatible(b.ring()), "intersection across rings");
    assert!(
        ring.var_index("u").is_none(),
        "ring already uses the reserved tag variable 'u'"
    );
    let mut vars = vec!["u".to_string()];
    vars.extend(ring.vars().iter().cloned());
    let tag_ring = PolyRing::new(vars, ring.field().clone(), MonomialOrder::Block { split: 1 }).unwrap();
    let var_map: Vec<Option<usize>> = (0..ring.nvars()).map(|i| Some(i + 1)).collect();
    let u = tag_ring.var(0);
    let one_minus_u = tag_ring.one().sub(&u);
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(u.mul(&g.map_into(&tag_ring, &var_map)));
    }
    for g in b.gens() {
        gens.push(one_minus_u.mul(&g.map_into(&tag_ring, &var_map)));
    }
    let tagged = Ideal::new(tag_ring, gens);
    let eliminated = eliminate(&tagged, &[0]);
    // transport back into the caller's ring (same variables, caller's order)
    let back: Vec<Polynomial> = eliminated
        .gens()
        .iter()
        .map(|g| {
            g.map_into(ring, &(0..ring.nvars()).map(Some).collect::<Vec<_>>())
        })
        .collect();
    Ideal::new(ring.clone(), back)
}

/// Ideal quotient `(I : J) = ∩_g (I : g)`, each `(I : g)` computed as
/// `(I ∩ (g)) / g`. By convention `(I : (0)) = (1)`; a zero divisor ideal
/// therefore yields the unit ideal, which downstream regularity tests
/// read as "no regular element certified".
pub fn colon(i: &Ideal, j: &Ideal) -> Ideal {
    let ring = i.ring().clone();
    let gens: Vec<&Polynomial> = j.gens().iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ideal::new(ring.clone(), vec![ring.one()]);
    }
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let single = Ideal::new(ring.clone(), vec![(*g).clone()]);
        let meet = intersect(i, &single);
        let quotient: Vec<Polynomial> = meet
            .gens()
            .iter()
            .map(|h| {
                h.div_exact(g)
                    .expect("element of I ∩ (g) must be divisible by g")
            })
            .collect();
        let part = Ideal::new(ring.clone(), quotient);
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part),
        });
    }
    acc.unwrap()
}

/// Does `(K + b)/b` contain a nonzerodivisor of the (reduced, trusted)
/// quotient by `b`? Tested as `colon(b, K) == b`.
pub fn is_regular_mod(k: &Ideal, b: &Ideal) -> bool {
    if k.gens().iter().all(|g| g.is_zero()) {
        return b.is_unit();
    }
    if b.is_zero() {
        // the ambient polynomial ring is a domain
        return k.gens().iter().any(|g| !g.is_zero());
    }
    colon(b, k).equals(b)
}

// ---- Krull dimension ----

/// Affine Krull dimension report. `dim == None` flags the empty variety
/// (unit ideal); then `codim` equals the full variable count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub dim: Option<usize>,
    pub codim: usize,
}

/// Affine Krull dimension of `ring/I` by the standard combinatorial count
/// on the leading-term ideal: the maximum cardinality of a variable subset
/// containing the support of no leading monomial.
pub fn krull_dimension(ideal: &Ideal) -> DimensionReport {
    let n = ideal.ring().nvars();
    assert!(n <= 24, "combinatorial dimension count limited to 24 variables");
    let gb = ideal.gb();
    let supports: Vec<u32> = gb
        .iter()
        .map(|g| {
            let mut mask = 0u32;
            for v in g.leading_monomial().unwrap().support() {
                mask |= 1 << v;
            }
            mask
        })
        .collect();
    if supports.contains(&0) {
        // a constant lies in the ideal: empty variety
        return DimensionReport {
            dim: None,
            codim: n,
        };
    }
    let mut best: i64 = -1;
    for subset in 0u32..(1u32 << n) {
        if supports.iter().all(|&m| m & !subset != 0) {
            let size = subset.count_ones() as i64;
            if size > best {
                best = size;
            }
        }
    }
    debug_assert!(best >= 0);
    DimensionReport {
        dim: Some(best as usize),
        codim: n - best as usize,
    }
}

// ---- Fixed-degree linear algebra ----

/// Basis of the space of k-linear relations among the normal forms of
/// `polys` modulo `modulus`: all tuples `(c_l)` with `Σ c_l·NF(polys_l) = 0`.
pub fn linear_relations(polys: &[Polynomial], modulus: &Ideal) -> Vec<Vec<Coeff>> {
    assert!(!polys.is_empty());
    let ring = polys[0].ring().clone();
    let field = ring.field().clone();
    let reduced: Vec<Polynomial> = polys.iter().map(|p| modulus.normal_form(p)).collect();
    let mut monomial_rows: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in &reduced {
        for (m, _) in p.terms() {
            let next = monomial_rows.len();
            monomial_rows.entry(m.clone()).or_insert(next);
        }
    }
    let mut mat = KMatrix::zero(field.clone(), monomial_rows.len().max(1), reduced.len());
    for (col, p) in reduced.iter().enumerate() {
        for (m, c) in p.terms() {
            let row = monomial_rows[m];
            mat.set(row, col, c.clone());
        }
    }
    mat.nullspace()
}

/// The bidegree-(1,1) slice: a k-basis of all tuples `(c_{ij})` with
/// `Σ c_{ij}·x_i·f_j ≡ 0 mod a`. Solution layout is i-major:
/// `sol[i*(m+1) + j] = c_{ij}`. Each solution encodes one linear syzygy.
pub fn kernel_slice(a: &Ideal, forms: &[Polynomial]) -> Vec<Vec<Coeff>> {
    let ring = a.ring();
    let n1 = ring.nvars();
    let mut products = Vec::with_capacity(n1 * forms.len());
    for i in 0..n1 {
        let xi = ring.var(i);
        for f in forms {
            products.push(xi.mul(f));
        }
    }
    linear_relations(&products, a)
}
