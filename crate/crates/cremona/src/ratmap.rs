//! The calculus of rational data: validation, equivalence of
//! representatives, composition, restriction to a component, image
//! computation, and representative minimalization.
//!
//! A rational datum is an ordered tuple of forms of a common degree
//! `d >= 1` on `k[X]/a`, with two conditions: (i) the coordinate ring is
//! torsionfree over the subring the forms generate, and (ii) the ideal
//! the forms generate contains a regular element. Condition (ii) is
//! certified at construction; condition (i) is automatic over a domain,
//! checked against user-supplied minimal primes when given, and
//! otherwise surfaced as an explicit warning on every downstream report.

use crate::gcd::gcd_many;
use crate::groebner::{eliminate, is_regular_mod, krull_dimension, DimensionReport, Ideal};
use crate::monomial::{Bigrading, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatMapError {
    ReservedVarName(String),
    SourceInhomogeneous,
    SourceDimensionTooSmall,
    EmptyMap,
    DegreeZero,
    DegreeMismatch { expected: u32, found: u32 },
    InhomogeneousForm(usize),
    AllFormsVanish,
    ConditionTwoFails,
    ShapeMismatch,
    RingMismatch,
    ImageMismatch,
    NotContainedInPrime,
}

impl fmt::Display for RatMapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatMapError::ReservedVarName(v) => write!(
                f,
                "variable name '{}' is reserved for internal ring constructions",
                v
            ),
            RatMapError::SourceInhomogeneous => write!(f, "source ideal is not homogeneous"),
            RatMapError::SourceDimensionTooSmall => {
                write!(f, "source coordinate ring must have dimension at least 1")
            }
            RatMapError::EmptyMap => write!(f, "a rational datum needs at least one form"),
            RatMapError::DegreeZero => write!(f, "forms must have degree at least 1"),
            RatMapError::DegreeMismatch { expected, found } => {
                write!(f, "form degrees differ: {} vs {}", expected, found)
            }
            RatMapError::InhomogeneousForm(j) => write!(f, "form {} is not homogeneous", j),
            RatMapError::AllFormsVanish => {
                write!(f, "all forms lie in the source ideal")
            }
            RatMapError::ConditionTwoFails => write!(
                f,
                "the base ideal has no regular element modulo the source ideal"
            ),
            RatMapError::ShapeMismatch => write!(f, "data have different numbers of forms"),
            RatMapError::RingMismatch => write!(f, "data live over different rings"),
            RatMapError::ImageMismatch => {
                write!(f, "outer datum's source ideal differs from the inner datum's image")
            }
            RatMapError::NotContainedInPrime => {
                write!(f, "the source ideal is not contained in the supplied prime")
            }
        }
    }
}

impl std::error::Error for RatMapError {}

/// Status of the torsionfreeness condition (i).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionI {
    /// Zero source ideal: the source ring is a polynomial ring, hence a domain.
    Automatic,
    /// Checked against the user-supplied minimal primes (their primality
    /// and completeness are trusted assumptions).
    VerifiedAgainstPrimes,
    /// No decomposition available; surfaced as a warning downstream.
    Unverified,
}

/// A validated rational datum: source ideal, forms (reduced mod the
/// source), common degree, and the condition certificates.
#[derive(Clone, Debug)]
pub struct RationalDatum {
    source: Ideal,
    forms: Vec<Polynomial>,
    degree: u32,
    condition_i: ConditionI,
}

impl RationalDatum {
    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn ring(&self) -> &PolyRing {
        self.source.ring()
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn condition_i(&self) -> ConditionI {
        self.condition_i
    }

    /// Number of forms minus one (the target projective dimension).
    pub fn target_m(&self) -> usize {
        self.forms.len() - 1
    }

    /// Number of source variables minus one.
    pub fn source_n(&self) -> usize {
        self.ring().nvars() - 1
    }

    /// The ideal the forms generate.
    pub fn base_ideal(&self) -> Ideal {
        Ideal::new(self.ring().clone(), self.forms.clone())
    }

    /// Scale every form by the inverse leading coefficient of the first
    /// nonzero one (an equivalent representative, canonical for printing).
    pub fn scalar_normalized(&self) -> RationalDatum {
        let Some(first) = self.forms.iter().find(|f| !f.is_zero()) else {
            return self.clone();
        };
        let inv = self
            .ring()
            .field()
            .inv(first.leading_coeff().unwrap())
            .unwrap();
        RationalDatum {
            source: self.source.clone(),
            forms: self.forms.iter().map(|f| f.scale(&inv)).collect(),
            degree: self.degree,
            condition_i: self.condition_i,
        }
    }
}

/// The image of a rational map: the ideal of all polynomial relations
/// among the forms, in the internal target ring `k[Y0..Ym]`, plus the
/// affine dimension of the image cone.
#[derive(Clone, Debug)]
pub struct MapImage {
    pub ideal: Ideal,
    pub dimension: DimensionReport,
}

impl MapImage {
    pub fn from_ideal(ideal: Ideal) -> MapImage {
        let dimension = krull_dimension(&ideal);
        MapImage { ideal, dimension }
    }
}

/// The internal target ring `k[Y0..Ym]`, grevlex.
pub fn target_ring(ring: &PolyRing, m_plus_1: usize) -> PolyRing {
    let vars = (0..m_plus_1).map(|j| format!("Y{}", j)).collect();
    PolyRing::new(vars, ring.field().clone(), MonomialOrder::GrevLex).unwrap()
}

/// Validate forms over `k[X]/a` into a rational datum.
///
/// Checks: no reserved variable names, homogeneous source ideal, source
/// dimension >= 1, forms homogeneous of one degree `d >= 1` after
/// reduction mod `a`, not all forms in `a`, and condition (ii) via the
/// regularity of the base ideal mod `a`. Condition (i) follows the
/// policy described on [`ConditionI`]; `primes` may be empty.
pub fn validate_datum(
    source: Ideal,
    forms: Vec<Polynomial>,
    primes: &[Ideal],
) -> Result<RationalDatum, RatMapError> {
    let ring = source.ring().clone();
    // the tag names would collide with the colon/Rees constructions; the
    // internal target names Y0..Ym are additionally rejected at the CLI
    // input layer, where they would make echoes ambiguous
    for v in ring.vars() {
        if v == "t" || v == "u" {
            return Err(RatMapError::ReservedVarName(v.clone()));
        }
    }
    if source.gens().iter().any(|g| !g.is_homogeneous()) {
        return Err(RatMapError::SourceInhomogeneous);
    }
    if forms.is_empty() {
        return Err(RatMapError::EmptyMap);
    }
    for f in &forms {
        if !f.ring().compatible(&ring) {
            return Err(RatMapError::RingMismatch);
        }
    }
    match krull_dimension(&source).dim {
        Some(d) if d >= 1 => {}
        _ => return Err(RatMapError::SourceDimensionTooSmall),
    }
    // canonical representatives
    let forms: Vec<Polynomial> = forms.iter().map(|f| source.normal_form(f)).collect();
    let mut degree: Option<u32> = None;
    for (j, f) in forms.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        if !f.is_homogeneous() {
            return Err(RatMapError::InhomogeneousForm(j));
        }
        let d = f.total_degree().unwrap();
        match degree {
            None => degree = Some(d),
            Some(e) if e != d => {
                return Err(RatMapError::DegreeMismatch {
                    expected: e,
                    found: d,
                })
            }
            _ => {}
        }
    }
    let degree = degree.ok_or(RatMapError::AllFormsVanish)?;
    if degree == 0 {
        return Err(RatMapError::DegreeZero);
    }
    let base = Ideal::new(ring.clone(), forms.clone());
    if !is_regular_mod(&base, &source) {
        return Err(RatMapError::ConditionTwoFails);
    }
    let condition_i = if source.is_zero() {
        ConditionI::Automatic
    } else if !primes.is_empty() {
        verify_condition_i(&source, &forms, primes)?
    } else {
        ConditionI::Unverified
    };
    Ok(RationalDatum {
        source,
        forms,
        degree,
        condition_i,
    })
}

/// Condition (i) against supplied minimal primes: every prime must
/// contract to a minimal prime of the image subring. The contractions
/// are the images of the restrictions; each is prime by construction,
/// their intersection is the image ideal, so all are minimal exactly
/// when none strictly contains another.
fn verify_condition_i(
    source: &Ideal,
    forms: &[Polynomial],
    primes: &[Ideal],
) -> Result<ConditionI, RatMapError> {
    let mut contractions: Vec<Ideal> = Vec::new();
    for p in primes {
        if !p.ring().compatible(source.ring()) {
            return Err(RatMapError::RingMismatch);
        }
        if !p.contains_ideal(source) {
            return Err(RatMapError::NotContainedInPrime);
        }
        let restricted_forms: Vec<Polynomial> = forms.iter().map(|f| p.normal_form(f)).collect();
        contractions.push(image_of(p, &restricted_forms));
    }
    for (i, bi) in contractions.iter().enumerate() {
        for (j, bj) in contractions.iter().enumerate() {
            if i == j {
                continue;
            }
            // b_i strictly inside b_j would make b_j non-minimal
            if bj.contains_ideal(bi) && !bi.contains_ideal(bj) {
                return Err(RatMapError::ConditionTwoFails);
            }
        }
    }
    Ok(ConditionI::VerifiedAgainstPrimes)
}

/// The identity datum on `k[X]/a`: the residues of the variables.
pub fn identity_datum(source: &Ideal) -> Result<RationalDatum, RatMapError> {
    let ring = source.ring().clone();
    let forms: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
    validate_datum(source.clone(), forms, &[])
}

/// Equivalence of representatives: all 2x2 minors of the stacked matrix
/// vanish mod the source ideal AND the ideal of all entries carries a
/// regular element.
pub fn equivalent(a: &RationalDatum, b: &RationalDatum) -> Result<bool, RatMapError> {
    if !a.ring().compatible(b.ring()) {
        return Err(RatMapError::RingMismatch);
    }
    if a.forms.len() != b.forms.len() {
        return Err(RatMapError::ShapeMismatch);
    }
    let source = &a.source;
    for i in 0..a.forms.len() {
        for j in (i + 1)..a.forms.len() {
            let minor = a.forms[i].mul(&b.forms[j]).sub(&a.forms[j].mul(&b.forms[i]));
            if !source.contains(&minor) {
                return Ok(false);
            }
        }
    }
    let mut entries = a.forms.clone();
    entries.extend(b.forms.iter().cloned());
    let entry_ideal = Ideal::new(a.ring().clone(), entries);
    Ok(is_regular_mod(&entry_ideal, source))
}

/// Image ideal by elimination: `b = (a·k[X,Y,t] + (Y_j - t·f_j)) ∩ k[Y]`.
/// The elimination ring uses internal slot names (`t`, `X0..Xn`,
/// `Y0..Ym`); all transport is positional, so user names never collide.
fn image_of(source: &Ideal, forms: &[Polynomial]) -> Ideal {
    let ring = source.ring();
    let nx = ring.nvars();
    let m1 = forms.len();
    let d = forms
        .iter()
        .filter_map(|f| f.total_degree())
        .max()
        .unwrap_or(1) as i64;
    let mut vars = vec!["t".to_string()];
    vars.extend((0..nx).map(|i| format!("X{}", i)));
    vars.extend((0..m1).map(|j| format!("Y{}", j)));
    let mut weights = vec![(-d, 1i64)];
    weights.extend(std::iter::repeat_n((1i64, 0i64), nx));
    weights.extend(std::iter::repeat_n((0i64, 1i64), m1));
    let big = PolyRing::new(vars, ring.field().clone(), MonomialOrder::GrevLex)
        .unwrap()
        .with_grading(Bigrading::new(weights));
    let x_map: Vec<Option<usize>> = (0..nx).map(|i| Some(i + 1)).collect();
    let t = big.var(0);
    let mut gens: Vec<Polynomial> = source.gens().iter().map(|g| g.map_into(&big, &x_map)).collect();
    for (j, f) in forms.iter().enumerate() {
        let yj = big.var(1 + nx + j);
        gens.push(yj.sub(&t.mul(&f.map_into(&big, &x_map))));
    }
    let ideal = Ideal::new(big, gens);
    let drop: Vec<usize> = (0..=nx).collect(); // t and all of X
    let elim = eliminate(&ideal, &drop);
    // transport into the canonical target ring
    let target = target_ring(ring, m1);
    let id_map: Vec<Option<usize>> = (0..m1).map(Some).collect();
    let gens: Vec<Polynomial> = elim
        .gens()
        .iter()
        .map(|g| g.map_into(&target, &id_map))
        .collect();
    Ideal::from_reduced_gb(target, gens)
}

/// The image of a rational datum: all polynomial relations among its
/// forms, with the affine dimension of the image cone.
pub fn image(datum: &RationalDatum) -> MapImage {
    MapImage::from_ideal(image_of(&datum.source, &datum.forms))
}

/// Composite `g(f)`: `g` must live over the image of `f` (checked by
/// ideal equality). The result is a datum over `f`'s source of degree
/// `d·e`, re-validated.
pub fn compose(g: &RationalDatum, f: &RationalDatum) -> Result<RationalDatum, RatMapError> {
    let img = image(f);
    if g.ring().nvars() != f.forms.len() {
        return Err(RatMapError::ImageMismatch);
    }
    // transport g's source by variable position into the internal target ring
    let target = img.ideal.ring().clone();
    let pos_map: Vec<Option<usize>> = (0..g.ring().nvars()).map(Some).collect();
    let g_source = Ideal::new(
        target.clone(),
        g.source
            .gens()
            .iter()
            .map(|p| p.map_into(&target, &pos_map))
            .collect(),
    );
    if !g_source.equals(&img.ideal) {
        return Err(RatMapError::ImageMismatch);
    }
    let mut composite = Vec::with_capacity(g.forms.len());
    for form in &g.forms {
        composite.push(form.substitute(&f.forms).expect("arity checked"));
    }
    let datum = validate_datum(f.source.clone(), composite, &[])?;
    debug_assert_eq!(datum.degree, g.degree * f.degree);
    Ok(datum)
}

/// Restrict to `Proj` of `R/P` for a user-supplied prime `P ⊇ a`
/// (primality is asserted by the caller, not verified).
pub fn restrict(datum: &RationalDatum, prime: &Ideal) -> Result<RationalDatum, RatMapError> {
    if !prime.ring().compatible(datum.ring()) {
        return Err(RatMapError::RingMismatch);
    }
    if !prime.contains_ideal(&datum.source) {
        return Err(RatMapError::NotContainedInPrime);
    }
    let forms: Vec<Polynomial> = datum.forms.iter().map(|f| prime.normal_form(f)).collect();
    validate_datum(prime.clone(), forms, &[])
}

/// Divide all coordinates by the folded gcd of the representatives.
/// The result is certified equivalent; on any certification failure the
/// input is returned unchanged.
pub fn minimalize(datum: &RationalDatum) -> RationalDatum {
    let ring = datum.ring().clone();
    let g = gcd_many(&datum.forms, &ring);
    if g.is_zero() || g.is_constant() {
        return datum.clone();
    }
    let divided: Vec<Polynomial> = match datum
        .forms
        .iter()
        .map(|f| {
            if f.is_zero() {
                Some(f.clone())
            } else {
                f.div_exact(&g)
            }
        })
        .collect()
    {
        Some(v) => v,
        None => return datum.clone(),
    };
    match validate_datum(datum.source.clone(), divided, &[]) {
        Ok(smaller) => match equivalent(&smaller, datum) {
            Ok(true) => RationalDatum {
                condition_i: datum.condition_i,
                ..smaller
            },
            _ => datum.clone(),
        },
        Err(_) => datum.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::text::parse_poly;

    fn ring(chr: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            FieldSpec::new(chr).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
        Ideal::new(
            r.clone(),
            gens.iter().map(|s| parse_poly(s, r).unwrap()).collect(),
        )
    }

    fn datum(r: &PolyRing, a: &[&str], forms: &[&str]) -> RationalDatum {
        validate_datum(
            ideal(r, a),
            forms.iter().map(|s| parse_poly(s, r).unwrap()).collect(),
            &[],
        )
        .unwrap()
    }

    #[test]
    fn validate_plane_cremona() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let d = datum(&r, &[], &["X1*X2", "X0*X2", "X0*X1"]);
        assert_eq!(d.degree(), 2);
        assert_eq!(d.condition_i(), ConditionI::Automatic);
    }

    #[test]
    fn validate_errors() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let e = validate_datum(
            Ideal::zero(r.clone()),
            vec![
                parse_poly("X0^2", &r).unwrap(),
                parse_poly("X1", &r).unwrap(),
            ],
            &[],
        )
        .unwrap_err();
        assert!(matches!(e, RatMapError::DegreeMismatch { .. }));

        let a = ideal(&r, &["X0*X1"]);
        let e = validate_datum(a, vec![parse_poly("X0*X1", &r).unwrap()], &[]).unwrap_err();
        assert_eq!(e, RatMapError::AllFormsVanish);

        let bad = ring(0, &["X0", "t"]);
        let e = validate_datum(Ideal::zero(bad.clone()), vec![bad.var(0)], &[]).unwrap_err();
        assert_eq!(e, RatMapError::ReservedVarName("t".into()));
    }

    #[test]
    fn validate_on_reducible_source() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let d = validate_datum(
            ideal(&r, &["X0*X1"]),
            vec![
                parse_poly("X0+X1", &r).unwrap(),
                parse_poly("X2", &r).unwrap(),
            ],
            &[],
        )
        .unwrap();
        assert_eq!(d.condition_i(), ConditionI::Unverified);

        // X0 lies in the minimal prime (X0): condition (ii) must fail
        let e = validate_datum(
            ideal(&r, &["X0*X1"]),
            vec![parse_poly("X0", &r).unwrap()],
            &[],
        )
        .unwrap_err();
        assert_eq!(e, RatMapError::ConditionTwoFails);
    }

    #[test]
    fn condition_i_with_primes() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let a = ideal(&r, &["X0*X1"]);
        let primes = [ideal(&r, &["X0"]), ideal(&r, &["X1"])];
        let d = validate_datum(
            a,
            vec![
                parse_poly("X0+X1", &r).unwrap(),
                parse_poly("X2", &r).unwrap(),
            ],
            &primes,
        )
        .unwrap();
        assert_eq!(d.condition_i(), ConditionI::VerifiedAgainstPrimes);
    }

    #[test]
    fn equivalence_basic() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let id = datum(&r, &[], &["X0", "X1", "X2"]);
        let scaled = datum(&r, &[], &["X0^2", "X0*X1", "X0*X2"]);
        assert!(equivalent(&id, &scaled).unwrap());

        let crem = datum(&r, &[], &["X1*X2", "X0*X2", "X0*X1"]);
        assert!(!equivalent(&crem, &id).unwrap());
        assert!(equivalent(&crem, &crem).unwrap());
        // symmetry and transitivity across a chain of rescalings
        assert!(equivalent(&scaled, &id).unwrap());
        let scaled2 = datum(&r, &[], &["X0*X1", "X1^2", "X1*X2"]);
        assert!(equivalent(&scaled, &scaled2).unwrap());
        assert!(equivalent(&id, &scaled2).unwrap());
    }

    #[test]
    fn image_of_segre_and_identity() {
        let r = ring(0, &["X0", "X1", "X2", "X3"]);
        let segre = datum(&r, &[], &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]);
        let img = image(&segre);
        let ry = img.ideal.ring().clone();
        assert_eq!(img.ideal.gens().len(), 1);
        let quadric = Ideal::new(
            ry.clone(),
            vec![parse_poly("Y0*Y3 - Y1*Y2", &ry).unwrap()],
        );
        assert!(img.ideal.equals(&quadric));
        assert_eq!(img.dimension.dim, Some(3));

        let r2 = ring(0, &["X0", "X1", "X2"]);
        let id = datum(&r2, &[], &["X0", "X1", "X2"]);
        let img2 = image(&id);
        assert!(img2.ideal.is_zero());
        assert_eq!(img2.dimension.dim, Some(3));

        let crem = datum(&r2, &[], &["X1*X2", "X0*X2", "X0*X1"]);
        let img3 = image(&crem);
        assert!(img3.ideal.is_zero());
        assert_eq!(img3.dimension.dim, Some(3));
    }

    #[test]
    fn compose_cremona_with_itself() {
        let rx = ring(0, &["X0", "X1", "X2"]);
        let f = datum(&rx, &[], &["X1*X2", "X0*X2", "X0*X1"]);
        let ry = ring(0, &["Z0", "Z1", "Z2"]); // any names; matched by position
        let g = datum(&ry, &[], &["Z1*Z2", "Z0*Z2", "Z0*Z1"]);
        let gf = compose(&g, &f).unwrap();
        assert_eq!(gf.degree(), 4);
        let expect: Vec<Polynomial> = ["X0^2*X1*X2", "X0*X1^2*X2", "X0*X1*X2^2"]
            .iter()
            .map(|s| parse_poly(s, &rx).unwrap())
            .collect();
        assert_eq!(gf.forms(), &expect[..]);
        // composite with identity returns an equivalent datum
        let id = identity_datum(&Ideal::zero(rx.clone())).unwrap();
        assert!(equivalent(&gf, &id).unwrap());
    }

    #[test]
    fn compose_identity_both_sides() {
        let rx = ring(0, &["X0", "X1", "X2"]);
        let f = datum(&rx, &[], &["X1*X2", "X0*X2", "X0*X1"]);
        let ry = ring(0, &["W0", "W1", "W2"]);
        let idy = datum(&ry, &[], &["W0", "W1", "W2"]);
        let comp = compose(&idy, &f).unwrap();
        assert!(equivalent(&comp, &f).unwrap());
        // identity as the inner map
        let idx = datum(&rx, &[], &["X0", "X1", "X2"]);
        let g = datum(&ry, &[], &["W1*W2", "W0*W2", "W0*W1"]);
        let comp2 = compose(&g, &idx).unwrap();
        assert!(equivalent(&comp2, &f).unwrap());
    }

    #[test]
    fn compose_image_mismatch() {
        let rx = ring(0, &["X0", "X1", "X2", "X3"]);
        let segre = datum(&rx, &[], &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]);
        let ry = ring(0, &["Z0", "Z1", "Z2", "Z3"]);
        // zero source ideal over the target: not the Segre quadric
        let g = datum(&ry, &[], &["Z0", "Z1", "Z2", "Z3"]);
        assert_eq!(compose(&g, &segre).unwrap_err(), RatMapError::ImageMismatch);
    }

    #[test]
    fn restriction() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let a = ideal(&r, &["X0*X1"]);
        let f = validate_datum(
            a.clone(),
            vec![
                parse_poly("X0+X1", &r).unwrap(),
                parse_poly("X2", &r).unwrap(),
            ],
            &[],
        )
        .unwrap();
        let p = ideal(&r, &["X0"]);
        let restricted = restrict(&f, &p).unwrap();
        assert_eq!(restricted.forms()[0], parse_poly("X1", &r).unwrap());
        assert_eq!(restricted.forms()[1], parse_poly("X2", &r).unwrap());

        // P = a with a prime: unchanged datum
        let r2 = ring(0, &["X0", "X1", "X2"]);
        let prime_a = ideal(&r2, &["X0"]);
        let g = validate_datum(
            prime_a.clone(),
            vec![
                parse_poly("X1", &r2).unwrap(),
                parse_poly("X2", &r2).unwrap(),
            ],
            &[],
        )
        .unwrap();
        let same = restrict(&g, &prime_a).unwrap();
        assert_eq!(same.forms(), g.forms());

        // a not contained in P
        let bad = ideal(&r, &["X2"]);
        assert_eq!(
            restrict(&f, &bad).unwrap_err(),
            RatMapError::NotContainedInPrime
        );
    }

    #[test]
    fn minimalization() {
        let r = ring(0, &["Y0", "Y1", "Y2"]);
        let d = datum(&r, &[], &["Y0^2", "Y0*Y1", "Y0*Y2"]);
        let m = minimalize(&d);
        let expect: Vec<Polynomial> = ["Y0", "Y1", "Y2"]
            .iter()
            .map(|s| parse_poly(s, &r).unwrap())
            .collect();
        assert_eq!(m.forms(), &expect[..]);
        assert_eq!(m.degree(), 1);

        let crem = datum(&r, &[], &["Y1*Y2", "Y0*Y2", "Y0*Y1"]);
        let unchanged = minimalize(&crem);
        assert_eq!(unchanged.forms(), crem.forms());
        // image is invariant under minimalization
        assert!(image(&m).ideal.equals(&image(&d).ideal));
    }

    #[test]
    fn image_generators_vanish_under_substitution() {
        let r = ring(32003, &["X0", "X1", "X2", "X3"]);
        let segre = datum(&r, &[], &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]);
        let img = image(&segre);
        for g in img.ideal.gens() {
            let pulled = g.substitute(segre.forms()).unwrap();
            assert!(segre.source().contains(&pulled));
        }
    }

    #[test]
    fn restrict_then_image_grows() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let a = ideal(&r, &["X0*X1"]);
        let f = validate_datum(
            a,
            vec![
                parse_poly("X0+X1", &r).unwrap(),
                parse_poly("X2", &r).unwrap(),
            ],
            &[],
        )
        .unwrap();
        let whole = image(&f);
        let p = ideal(&r, &["X0"]);
        let part = image(&restrict(&f, &p).unwrap());
        assert!(part.ideal.contains_ideal(&whole.ideal));
    }
}
