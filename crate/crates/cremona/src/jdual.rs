//! The birationality criterion: build the Jacobian dual matrix from the
//! degree-1 slice of the Rees presentation, compute its well-defined rank
//! over the image coordinate ring, decide birationality (rank n exactly),
//! and extract a representative of the inverse from signed maximal minors
//! or, failing that, from the null space.
//!
//! "Well-defined rank r" over a reduced quotient means: every (r+1)-minor
//! vanishes modulo the ambient ideal AND the r-minor ideal contains a
//! regular element. Both certificates are computed, never assumed.

use crate::field::Coeff;
use crate::groebner::{is_regular_mod, krull_dimension, DimensionReport, Ideal};
use crate::linalg::KMatrix;
use crate::matrix::{Combinations, PolyMatrix};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ratmap::{
    compose, equivalent, identity_datum, image, minimalize, restrict, validate_datum, ConditionI,
    MapImage, RatMapError, RationalDatum,
};
use crate::rees::{phi1, rees_ideal, sgd, slice1_codim_over_image, ReesPresentation, SgdReport};
use std::collections::BTreeMap;
use std::time::Instant;

// ---- Rank over a reduced quotient ----

/// How the regular-element certificate was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularWitness {
    /// A single r-minor is regular modulo the ambient ideal.
    SingleMinor,
    /// No single minor certified, but the full r-minor ideal did.
    FullMinorIdeal,
}

/// Result of the rank search: `rank` is defined only when both
/// certificates hold at `naive_rank` (the largest size with a minor
/// not vanishing modulo the ambient ideal).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankResult {
    pub rank: Option<usize>,
    pub naive_rank: usize,
    pub witness: Option<RegularWitness>,
}

/// Rank of `matrix` over the (trusted reduced) quotient by `ambient`,
/// searching downward from `min(rows, cols)`. Minors are enumerated
/// lazily with early exit on a single regular minor; descending a level
/// happens only after the whole level reduced to zero, which is exactly
/// the vanishing certificate for the level below.
pub fn rank_mod(matrix: &PolyMatrix, ambient: &Ideal) -> RankResult {
    assert!(matrix.ring().compatible(ambient.ring()));
    let max_size = matrix.rows().min(matrix.cols());
    if max_size == 0 {
        return RankResult {
            rank: Some(0),
            naive_rank: 0,
            witness: None,
        };
    }
    let gb = ambient.gb();
    let reducers: Option<&[Polynomial]> = if gb.is_empty() { None } else { Some(&gb) };

    for size in (1..=max_size).rev() {
        let mut nonzero: Vec<Polynomial> = Vec::new();
        let mut single_regular = false;
        'scan: for rs in Combinations::new(matrix.rows(), size) {
            for cs in Combinations::new(matrix.cols(), size) {
                let minor = matrix.submatrix(&rs, &cs).det_mod(reducers);
                if minor.is_zero() {
                    continue;
                }
                let single = Ideal::new(ambient.ring().clone(), vec![minor.clone()]);
                if is_regular_mod(&single, ambient) {
                    single_regular = true;
                    break 'scan;
                }
                let monic = minor.monic();
                if !nonzero.contains(&monic) {
                    nonzero.push(monic);
                }
            }
        }
        if single_regular {
            return RankResult {
                rank: Some(size),
                naive_rank: size,
                witness: Some(RegularWitness::SingleMinor),
            };
        }
        if !nonzero.is_empty() {
            // no single minor certified; the full minor ideal is the authority
            let minor_ideal = Ideal::new(ambient.ring().clone(), nonzero);
            if is_regular_mod(&minor_ideal, ambient) {
                return RankResult {
                    rank: Some(size),
                    naive_rank: size,
                    witness: Some(RegularWitness::FullMinorIdeal),
                };
            }
            return RankResult {
                rank: None,
                naive_rank: size,
                witness: None,
            };
        }
        // the whole level vanished: certificate for the next level down
    }
    RankResult {
        rank: Some(0),
        naive_rank: 0,
        witness: None,
    }
}

// ---- The Jacobian dual matrix ----

/// The Jacobian dual matrix over the image coordinate ring: a constant
/// block spanning the linear part of the source ideal (its row count is
/// the degeneration index) on top of the gradient rows of the degree-1
/// slice, entries reduced modulo the image ideal.
#[derive(Clone, Debug)]
pub struct JacobianDual {
    pub psi: PolyMatrix,
    pub dgi: usize,
    pub edim: usize,
    pub image_ideal: Ideal,
    pub rank: RankResult,
}

/// Build the Jacobian dual matrix from a Rees presentation. Rows:
/// a k-basis of the degree-1 part of `a` as constant rows, then one row
/// `(Q_0, ..., Q_n)` per slice-1 element `Σ_i Q_i(Y)·X_i`.
pub fn build_psi(rees: &ReesPresentation, source: &Ideal) -> JacobianDual {
    let nx = rees.nx;
    let target = rees.image_ideal.ring().clone();
    let field = target.field().clone();
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();

    // degenerate block from the linear part of the source ideal
    let a_gb = source.gb();
    let mut dgi = 0;
    for g in a_gb.iter() {
        if g.total_degree() == Some(1) {
            let coords = g
                .block_linear_coords(0..nx)
                .expect("linear form is linear in its own variables");
            let row: Vec<Polynomial> = coords
                .iter()
                .map(|c| {
                    let value = if c.is_zero() {
                        field.zero()
                    } else {
                        c.leading_coeff().unwrap().clone()
                    };
                    target.constant(value)
                })
                .collect();
            rows.push(row);
            dgi += 1;
        }
    }

    // gradient block from the degree-1 slice
    let y_map: Vec<Option<usize>> = (0..nx)
        .map(|_| None)
        .chain((0..rees.ny).map(Some))
        .collect();
    let b_gb = rees.image_ideal.gb();
    for g in &rees.slice1 {
        let coords = g
            .block_linear_coords(0..nx)
            .expect("slice-1 element has X-degree one");
        let row: Vec<Polynomial> = coords
            .iter()
            .map(|q| {
                let moved = q.map_into(&target, &y_map);
                crate::groebner::normal_form(&moved, &b_gb)
            })
            .collect();
        rows.push(row);
    }

    let entries: Vec<Polynomial> = rows.into_iter().flatten().collect();
    let psi = PolyMatrix::new(target, entries.len() / nx.max(1), nx, entries);
    let rank = rank_mod(&psi, &rees.image_ideal);
    JacobianDual {
        psi,
        dgi,
        edim: nx - dgi,
        image_ideal: rees.image_ideal.clone(),
        rank,
    }
}

// ---- Reports and the decision procedure ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Birational,
    NotBirational,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Birational => "birational",
            Verdict::NotBirational => "not-birational",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinearRankTest {
    pub applicable: bool,
    pub fires: bool,
    pub phi1_rank: Option<usize>,
    pub image_dim: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct SemilinearTest {
    pub fires: bool,
    pub codim: Option<usize>,
}

/// Per-component diagnostics for a user-supplied minimal prime
/// (informational; the global rank condition is the verdict authority).
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub prime: Ideal,
    pub jdrank: Option<usize>,
    pub edim: Option<usize>,
    pub criterion_holds: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug)]
pub struct BirationalityReport {
    pub verdict: Verdict,
    pub jdrank: Option<usize>,
    pub jdrank_plus: Option<usize>,
    pub naive_rank: usize,
    pub dgi: usize,
    pub edim: usize,
    pub source_dim: DimensionReport,
    pub image: MapImage,
    pub inverse: Option<RationalDatum>,
    pub inverse_verified: Option<bool>,
    pub extraction_diagnostic: Option<String>,
    pub linear_rank: Option<LinearRankTest>,
    pub semilinear: Option<SemilinearTest>,
    pub sgd: Option<SgdReport>,
    pub components: Vec<ComponentReport>,
    pub warnings: Vec<String>,
    pub timings: Vec<(String, f64)>,
}

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    /// Attempt inverse extraction and verification on a positive verdict.
    pub extract_inverse: bool,
    /// Run the sufficient tests and the semilinear generation degree.
    pub sufficient_tests: bool,
    /// Degree cap for the null-space fallback (default: twice the largest
    /// entry degree of the Jacobian dual matrix).
    pub degree_cap: Option<u32>,
    /// Minimal primes of the source for condition (i) and per-component
    /// diagnostics; primality is trusted.
    pub primes: Vec<Ideal>,
}

/// Full decision procedure: verdict is `Birational` exactly when the
/// Jacobian dual rank is defined and equals `n`; an undefined rank gives
/// `Indeterminate`, never a false positive.
pub fn analyze(datum: &RationalDatum, options: &AnalysisOptions) -> BirationalityReport {
    let n = datum.source_n();
    let mut warnings = Vec::new();
    let mut timings = Vec::new();

    match datum.condition_i() {
        ConditionI::Automatic => {}
        ConditionI::VerifiedAgainstPrimes => {
            warnings.push(
                "condition (i) verified against supplied primes; their primality and completeness are trusted"
                    .to_string(),
            );
        }
        ConditionI::Unverified => {
            warnings.push(
                "condition (i) (torsionfreeness over the image subring) unverified; supply minimal primes to check it"
                    .to_string(),
            );
        }
    }

    let t0 = Instant::now();
    let rees = rees_ideal(datum);
    timings.push(("rees".to_string(), t0.elapsed().as_secs_f64()));

    let t0 = Instant::now();
    let jd = build_psi(&rees, datum.source());
    timings.push(("rank".to_string(), t0.elapsed().as_secs_f64()));

    let source_dim = krull_dimension(datum.source());
    let image = MapImage::from_ideal(jd.image_ideal.clone());

    // rank bounds and the dimension inequality are theorems under the
    // trusted preconditions; a violation means the input broke them
    if let Some(r) = jd.rank.rank {
        assert!(
            jd.dgi <= r && r <= n,
            "rank outside [dgi, n]; is the source ideal radical?"
        );
        let plus = r - jd.dgi;
        assert!(plus < jd.edim, "non-degenerate rank exceeds edim - 1");
        if let (Some(dr), Some(ds)) = (source_dim.dim, image.dimension.dim) {
            assert!(
                dr as i64 - ds as i64 <= n as i64 - r as i64,
                "dimension inequality violated; is the source ideal radical?"
            );
            if plus == jd.edim - 1 {
                assert_eq!(ds, dr, "maximal rank forces equal dimensions");
            }
        }
    }

    let verdict = match jd.rank.rank {
        Some(r) if r == n => Verdict::Birational,
        Some(_) => Verdict::NotBirational,
        None => {
            warnings.push(format!(
                "rank undefined: naive rank {} lacks a regular-element certificate",
                jd.rank.naive_rank
            ));
            Verdict::Indeterminate
        }
    };

    let mut inverse = None;
    let mut inverse_verified = None;
    let mut extraction_diagnostic = None;
    if verdict == Verdict::Birational && options.extract_inverse {
        let t0 = Instant::now();
        match extract_inverse(&jd, options.degree_cap) {
            Ok(raw) => {
                let minimal = minimalize(&raw).scalar_normalized();
                match verify_inverse(datum, &minimal) {
                    Ok(true) => {
                        inverse_verified = Some(true);
                        inverse = Some(minimal);
                    }
                    Ok(false) => {
                        inverse_verified = Some(false);
                        warnings.push(
                            "extracted inverse failed composition verification".to_string(),
                        );
                        extraction_diagnostic =
                            Some("candidate inverse did not verify".to_string());
                    }
                    Err(e) => {
                        extraction_diagnostic =
                            Some(format!("inverse verification errored: {}", e));
                    }
                }
            }
            Err(diag) => {
                extraction_diagnostic = Some(diag);
                warnings.push("inverse extraction failed; verdict stands".to_string());
            }
        }
        timings.push(("inverse".to_string(), t0.elapsed().as_secs_f64()));
    }

    let (mut linear_rank, mut semilinear, mut sgd_report) = (None, None, None);
    if options.sufficient_tests {
        let t0 = Instant::now();
        linear_rank = Some(linear_rank_test(datum));
        semilinear = Some(semilinear_height_test(datum, &rees));
        sgd_report = Some(sgd(&rees));
        timings.push(("sufficient-tests".to_string(), t0.elapsed().as_secs_f64()));
    }

    let mut components = Vec::new();
    if !options.primes.is_empty() {
        let t0 = Instant::now();
        warnings.push(
            "per-component ranks are informational; the global rank is the verdict authority"
                .to_string(),
        );
        for p in &options.primes {
            components.push(component_report(datum, p));
        }
        timings.push(("components".to_string(), t0.elapsed().as_secs_f64()));
    }

    BirationalityReport {
        verdict,
        jdrank: jd.rank.rank,
        jdrank_plus: jd.rank.rank.map(|r| r - jd.dgi),
        naive_rank: jd.rank.naive_rank,
        dgi: jd.dgi,
        edim: jd.edim,
        source_dim,
        image,
        inverse,
        inverse_verified,
        extraction_diagnostic,
        linear_rank,
        semilinear,
        sgd: sgd_report,
        components,
        warnings,
        timings,
    }
}

fn component_report(datum: &RationalDatum, prime: &Ideal) -> ComponentReport {
    match restrict(datum, prime) {
        Ok(part) => {
            let rees = rees_ideal(&part);
            let jd = build_psi(&rees, part.source());
            ComponentReport {
                prime: prime.clone(),
                jdrank: jd.rank.rank,
                edim: Some(jd.edim),
                criterion_holds: jd.rank.rank.map(|r| r - jd.dgi + 1 == jd.edim),
                error: None,
            }
        }
        Err(e) => ComponentReport {
            prime: prime.clone(),
            jdrank: None,
            edim: None,
            criterion_holds: None,
            error: Some(e.to_string()),
        },
    }
}

// ---- Inverse extraction ----

/// Extract a representative of the inverse from a maximal-rank Jacobian
/// dual: first by the ordered signed n-minors of an n-row submatrix of
/// rank n (deterministic lexicographic row search), then by a bounded
/// degree-by-degree null-space search over the image ring.
pub fn extract_inverse(jd: &JacobianDual, degree_cap: Option<u32>) -> Result<RationalDatum, String> {
    let n = jd.psi.cols() - 1;
    if jd.rank.rank != Some(n) {
        return Err("extraction requires Jacobian dual rank n".to_string());
    }
    let b = &jd.image_ideal;
    let gb = b.gb();
    let reducers: Option<&[Polynomial]> = if gb.is_empty() { None } else { Some(&gb) };

    if n >= 1 {
        for rows in Combinations::new(jd.psi.rows(), n) {
            let all_cols: Vec<usize> = (0..jd.psi.cols()).collect();
            let sub = jd.psi.submatrix(&rows, &all_cols);
            let sub_rank = rank_mod(&sub, b);
            if sub_rank.rank != Some(n) {
                continue;
            }
            let minors: Vec<Polynomial> = sub
                .signed_minors_drop_col(reducers)
                .into_iter()
                .map(|m| crate::groebner::normal_form(&m, &gb))
                .collect();
            if minors.iter().all(|m| m.is_zero()) {
                continue;
            }
            if let Ok(datum) = validate_datum(b.clone(), minors, &[]) {
                return Ok(datum.scalar_normalized());
            }
        }
    }

    // null-space fallback: solve psi·w = 0 degree by degree
    let max_entry_degree = jd
        .psi
        .entries()
        .iter()
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(1);
    let cap = degree_cap.unwrap_or(2 * max_entry_degree.max(1));
    for degree in 1..=cap {
        for candidate in nullspace_candidates(jd, degree) {
            if let Ok(datum) = validate_datum(b.clone(), candidate, &[]) {
                return Ok(datum.scalar_normalized());
            }
        }
    }
    Err(format!(
        "no row subset yielded a valid minor datum and the null-space search exhausted degree cap {}",
        cap
    ))
}

fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == nvars {
            let mut exps = cur.clone();
            exps.push(left);
            out.push(Monomial::new(exps));
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(nvars, pos + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(nvars, 0, degree, &mut Vec::new(), &mut out);
    out
}

/// Homogeneous degree-`e` vectors in the null space of psi over the
/// image ring, coordinates expanded over standard monomials.
fn nullspace_candidates(jd: &JacobianDual, degree: u32) -> Vec<Vec<Polynomial>> {
    let ring = jd.psi.ring().clone();
    let field = ring.field().clone();
    let ncols = jd.psi.cols();
    let gb = jd.image_ideal.gb();
    // standard monomials of the target degree
    let basis: Vec<Monomial> = monomials_of_degree(ring.nvars(), degree)
        .into_iter()
        .filter(|m| {
            !gb.iter()
                .any(|g| g.leading_monomial().unwrap().divides(m))
        })
        .collect();
    if basis.is_empty() {
        return Vec::new();
    }
    // unknowns: (column j, basis monomial) pairs
    let unknowns: Vec<(usize, &Monomial)> = (0..ncols)
        .flat_map(|j| basis.iter().map(move |m| (j, m)))
        .collect();
    // one equation per (psi row, monomial) pair
    let mut row_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, Coeff)>> = Vec::with_capacity(unknowns.len());
    for (j, m) in &unknowns {
        let mut col = Vec::new();
        for r in 0..jd.psi.rows() {
            let prod = jd
                .psi
                .at(r, *j)
                .mul(&ring.monomial((*m).clone(), field.one()));
            let reduced = crate::groebner::normal_form(&prod, &gb);
            for (mono, c) in reduced.terms() {
                let next = row_index.len();
                let idx = *row_index.entry((r, mono.clone())).or_insert(next);
                col.push((idx, c.clone()));
            }
        }
        columns.push(col);
    }
    let mut mat = KMatrix::zero(field.clone(), row_index.len().max(1), unknowns.len());
    for (cidx, col) in columns.iter().enumerate() {
        for (ridx, c) in col {
            mat.set(*ridx, cidx, c.clone());
        }
    }
    let null = mat.nullspace();
    let mut candidates: Vec<Vec<Polynomial>> = Vec::new();
    let to_vector = |sol: &[Coeff]| -> Vec<Polynomial> {
        (0..ncols)
            .map(|j| {
                let terms: Vec<(Monomial, Coeff)> = basis
                    .iter()
                    .enumerate()
                    .map(|(bi, m)| (m.clone(), sol[j * basis.len() + bi].clone()))
                    .filter(|(_, c)| !field.is_zero(c))
                    .collect();
                ring.from_terms(terms)
            })
            .collect()
    };
    for sol in &null {
        candidates.push(to_vector(sol));
    }
    // a k-combination can succeed where the raw basis vectors fail
    if null.len() > 1 {
        let mut sum = vec![field.zero(); unknowns.len()];
        for sol in &null {
            for (i, c) in sol.iter().enumerate() {
                sum[i] = field.add(&sum[i], c);
            }
        }
        candidates.push(to_vector(&sum));
    }
    candidates
}

/// True when `g` composed with `f` is equivalent to the identity datum
/// on `f`'s source.
pub fn verify_inverse(f: &RationalDatum, g: &RationalDatum) -> Result<bool, RatMapError> {
    let composite = compose(g, f)?;
    let id = identity_datum(f.source())?;
    equivalent(&composite, &id)
}

// ---- Sufficient tests ----

/// Maximal-linear-rank sufficient test, applicable when the source is
/// projective space: fires when the image cone has full dimension and
/// the linear syzygy matrix has rank n. Firing certifies birationality;
/// not firing decides nothing.
pub fn linear_rank_test(datum: &RationalDatum) -> LinearRankTest {
    if !datum.source().is_zero() {
        return LinearRankTest {
            applicable: false,
            fires: false,
            phi1_rank: None,
            image_dim: None,
        };
    }
    let n = datum.source_n();
    let img = image(datum);
    let p = phi1(datum);
    let fires = img.dimension.dim == Some(n + 1) && p.rank.rank == Some(n);
    LinearRankTest {
        applicable: true,
        fires,
        phi1_rank: p.rank.rank,
        image_dim: img.dimension.dim,
    }
}

/// Semilinear-height sufficient test: fires when the degree-1 slice
/// ideal has codimension at least n over the image ring.
pub fn semilinear_height_test(datum: &RationalDatum, rees: &ReesPresentation) -> SemilinearTest {
    let n = datum.source_n();
    let codim = slice1_codim_over_image(rees);
    SemilinearTest {
        fires: codim.is_some_and(|c| c >= n),
        codim,
    }
}

// ---- Koszul membership check ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KoszulCheck {
    /// Every Koszul relation of the signed minors certified inside the
    /// column module.
    AllCertified,
    /// Some membership system was infeasible within the degree bound
    /// (not a refutation).
    BoundExhausted,
}

/// Certify that the Koszul relations of the ordered signed n-minors of
/// an (n+1) x n matrix lie in its column module, by solving bounded-degree
/// linear systems over the coefficient field.
pub fn koszul_hilbert_check(rho: &PolyMatrix) -> KoszulCheck {
    assert_eq!(rho.rows(), rho.cols() + 1, "expected an (n+1) x n matrix");
    let n = rho.cols();
    assert!(n >= 1);
    let ring = rho.ring().clone();
    let field = ring.field().clone();
    let minors = rho.signed_minors_drop_row(None);
    if minors.iter().all(|m| m.is_zero()) {
        return KoszulCheck::AllCertified;
    }
    let delta_deg = minors.iter().filter_map(|m| m.total_degree()).max().unwrap();
    let min_col_deg = (0..n)
        .filter_map(|c| {
            (0..rho.rows())
                .filter_map(|r| rho.at(r, c).total_degree())
                .max()
        })
        .min()
        .unwrap_or(0);
    let bound = delta_deg.saturating_sub(min_col_deg) + 2;
    let basis: Vec<Monomial> = (0..=bound)
        .flat_map(|d| monomials_of_degree(ring.nvars(), d))
        .collect();

    // one coefficient matrix shared by every Koszul pair
    let mut row_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let register = |r: usize, m: &Monomial, row_index: &mut BTreeMap<(usize, Monomial), usize>| {
        let next = row_index.len();
        *row_index
            .entry((r, m.clone()))
            .or_insert(next)
    };
    let mut cols: Vec<Vec<(usize, Coeff)>> = Vec::new();
    for l in 0..n {
        for bm in &basis {
            let mut col = Vec::new();
            for r in 0..rho.rows() {
                let prod = rho.at(r, l).mul(&ring.monomial(bm.clone(), field.one()));
                for (mono, c) in prod.terms() {
                    let idx = register(r, mono, &mut row_index);
                    col.push((idx, c.clone()));
                }
            }
            cols.push(col);
        }
    }
    // make sure the target monomials are indexed too
    for (i, m) in minors.iter().enumerate() {
        let _ = i;
        for (mono, _) in m.terms() {
            for r in 0..rho.rows() {
                register(r, mono, &mut row_index);
            }
        }
    }
    let nrows = row_index.len().max(1);
    let mut mat = KMatrix::zero(field.clone(), nrows, cols.len());
    for (cidx, col) in cols.iter().enumerate() {
        for (ridx, c) in col {
            mat.set(*ridx, cidx, c.clone());
        }
    }

    for i in 0..rho.rows() {
        for j in (i + 1)..rho.rows() {
            // Koszul vector: Δ_i at slot j, -Δ_j at slot i
            let mut target = vec![field.zero(); nrows];
            for (mono, c) in minors[i].terms() {
                target[row_index[&(j, mono.clone())]] = c.clone();
            }
            for (mono, c) in minors[j].terms() {
                let idx = row_index[&(i, mono.clone())];
                target[idx] = field.sub(&target[idx], c);
            }
            if mat.solve(&target).is_none() {
                return KoszulCheck::BoundExhausted;
            }
        }
    }
    KoszulCheck::AllCertified
}

/// Rank-only analysis used by the jdrank command.
pub fn jdrank(datum: &RationalDatum) -> BirationalityReport {
    analyze(datum, &AnalysisOptions::default())
}
