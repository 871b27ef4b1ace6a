//! The bigraded Rees presentation ideal and the slices the criterion
//! consumes: the (0,*) part (image ideal), the X-degree-1 slice, the
//! bidegree-(1,1) slice (linear syzygies), and the semilinear generation
//! degree.
//!
//! One elimination does the work: with `deg t = (-d, 1)` the generators
//! `Y_j - t·f_j` are bihomogeneous, Buchberger preserves bihomogeneity,
//! and in a bihomogeneous basis an element with X-free leading term is
//! X-free outright, so both the image slice and the degree-1 slice fall
//! out of the single reduced basis of the presentation ideal.

use crate::field::Coeff;
use crate::groebner::{kernel_slice, krull_dimension, Ideal};
use crate::jdual::{rank_mod, RankResult};
use crate::matrix::PolyMatrix;
use crate::monomial::{Bidegree, Bigrading, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::ratmap::{target_ring, RationalDatum};

/// Bihomogeneous presentation of the Rees algebra of a rational datum.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    /// `k[X0..Xn, Y0..Ym]` with the standard bigrading (internal slot names).
    pub ring_xy: PolyRing,
    /// Reduced Gröbner basis of the presentation ideal, all bihomogeneous.
    pub j_basis: Vec<Polynomial>,
    /// The image ideal `b = J ∩ k[Y]`, in the internal target ring.
    pub image_ideal: Ideal,
    /// Basis elements of X-degree exactly 1 (bidegree `(1,q)`).
    pub slice1: Vec<Polynomial>,
    /// k-basis of the bidegree-(1,1) slice, from linear algebra
    /// independent of the Gröbner run.
    pub slice11: Vec<Polynomial>,
    pub nx: usize,
    pub ny: usize,
}

/// The linear part of the syzygy matrix: `m+1` rows, one column per
/// linear syzygy, entries linear forms of the source ring.
#[derive(Clone, Debug)]
pub struct Phi1 {
    pub matrix: PolyMatrix,
    pub rank: RankResult,
}

/// Semilinear generation degree: the least `s` with the Y-degree-`<= s`
/// part of the degree-1 slice generating all of it. `value` is tested
/// modulo the image ideal (the operative venue); `ambient` is the same
/// search without reducing modulo the image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SgdReport {
    pub value: Option<u32>,
    pub ambient: Option<u32>,
}

/// Compute the Rees presentation ideal
/// `J = (a·k[X,Y,t] + (Y_j - t·f_j)) ∩ k[X,Y]` and its slices.
pub fn rees_ideal(datum: &RationalDatum) -> ReesPresentation {
    let ring = datum.ring();
    let nx = ring.nvars();
    let forms = datum.forms();
    let ny = forms.len();
    let d = datum.degree() as i64;

    // elimination ring [t | X.. | Y..], internal slot names
    let mut vars = vec!["t".to_string()];
    vars.extend((0..nx).map(|i| format!("X{}", i)));
    vars.extend((0..ny).map(|j| format!("Y{}", j)));
    let mut weights = vec![(-d, 1i64)];
    weights.extend(std::iter::repeat_n((1i64, 0i64), nx));
    weights.extend(std::iter::repeat_n((0i64, 1i64), ny));
    let big = PolyRing::new(
        vars,
        ring.field().clone(),
        MonomialOrder::Block { split: 1 },
    )
    .unwrap()
    .with_grading(Bigrading::new(weights));

    let x_map: Vec<Option<usize>> = (0..nx).map(|i| Some(i + 1)).collect();
    let t = big.var(0);
    let mut gens: Vec<Polynomial> = datum
        .source()
        .gens()
        .iter()
        .map(|g| g.map_into(&big, &x_map))
        .collect();
    for (j, f) in forms.iter().enumerate() {
        let yj = big.var(1 + nx + j);
        gens.push(yj.sub(&t.mul(&f.map_into(&big, &x_map))));
    }
    let graded_check = big.grading().unwrap();
    for g in &gens {
        debug_assert!(!matches!(
            g.bidegree_under(graded_check),
            Bidegree::Inhomogeneous
        ));
    }
    let whole = Ideal::new(big.clone(), gens);
    let j_elim = crate::groebner::eliminate(&whole, &[0]);

    // transport into the bigraded presentation ring
    let ring_xy = j_elim
        .ring()
        .clone()
        .with_grading(Bigrading::xy(nx, ny));
    let j_basis: Vec<Polynomial> = j_elim.gens().iter().map(|g| g.with_order(&ring_xy)).collect();
    let grading = ring_xy.grading().unwrap();
    for g in &j_basis {
        assert!(
            !matches!(g.bidegree_under(grading), Bidegree::Inhomogeneous),
            "presentation basis element is not bihomogeneous"
        );
    }

    // image ideal: X-free elements (bihomogeneity makes the X-free
    // leading terms select exactly the (0,*) part, already reduced)
    let target = target_ring(ring, ny);
    let y_map: Vec<Option<usize>> = (0..nx)
        .map(|_| None)
        .chain((0..ny).map(Some))
        .collect();
    let b_gens: Vec<Polynomial> = j_basis
        .iter()
        .filter(|g| g.degree_in(0..nx).unwrap_or(0) == 0)
        .map(|g| g.map_into(&target, &y_map))
        .collect();
    let image_ideal = Ideal::from_reduced_gb(target, b_gens);

    let slice1: Vec<Polynomial> = j_basis
        .iter()
        .filter(|g| g.degree_in(0..nx).unwrap_or(0) == 1)
        .cloned()
        .collect();

    let slice11 = slice11_from_kernel(datum, &ring_xy, nx, ny);

    ReesPresentation {
        ring_xy,
        j_basis,
        image_ideal,
        slice1,
        slice11,
        nx,
        ny,
    }
}

/// Convert kernel-slice solutions into bidegree-(1,1) biforms
/// `Σ c_{ij}·X_i·Y_j` of the presentation ring.
fn slice11_from_kernel(
    datum: &RationalDatum,
    ring_xy: &PolyRing,
    nx: usize,
    ny: usize,
) -> Vec<Polynomial> {
    let sols = kernel_slice(datum.source(), datum.forms());
    sols.iter()
        .map(|sol| {
            let mut acc = ring_xy.zero();
            for i in 0..nx {
                for j in 0..ny {
                    let c = &sol[i * ny + j];
                    if ring_xy.field().is_zero(c) {
                        continue;
                    }
                    let xi_yj = ring_xy.var(i).mul(&ring_xy.var(nx + j));
                    acc = acc.add(&xi_yj.scale(c));
                }
            }
            acc
        })
        .collect()
}

/// Basis elements of X-degree exactly `p` (`p ∈ {0, 1}` supported:
/// the image part and the part driving the Jacobian dual).
pub fn slice(rees: &ReesPresentation, x_degree: u32) -> Vec<Polynomial> {
    assert!(x_degree <= 1, "only the (0,*) and (1,*) slices are extracted");
    rees.j_basis
        .iter()
        .filter(|g| g.degree_in(0..rees.nx).unwrap_or(0) == x_degree)
        .cloned()
        .collect()
}

/// The linear syzygy matrix of the datum's forms, columns from the
/// bidegree-(1,1) kernel slice (independent of the Gröbner run), rank
/// over the source ring.
pub fn phi1(datum: &RationalDatum) -> Phi1 {
    let ring = datum.ring().clone();
    let nx = ring.nvars();
    let ny = datum.forms().len();
    let sols = kernel_slice(datum.source(), datum.forms());
    let mut entries: Vec<Polynomial> = Vec::with_capacity(ny * sols.len().max(1));
    // rows indexed by form j, columns by syzygy; entry = Σ_i c_ij x_i
    for j in 0..ny {
        for sol in &sols {
            let mut lin = ring.zero();
            for i in 0..nx {
                let c: &Coeff = &sol[i * ny + j];
                if !ring.field().is_zero(c) {
                    lin = lin.add(&ring.var(i).scale(c));
                }
            }
            entries.push(datum.source().normal_form(&lin));
        }
    }
    let matrix = PolyMatrix::new(ring, ny, sols.len(), entries);
    let rank = rank_mod(&matrix, datum.source());
    Phi1 { matrix, rank }
}

fn y_degree(rees: &ReesPresentation, g: &Polynomial) -> u32 {
    g.degree_in(rees.nx..rees.nx + rees.ny).unwrap_or(0)
}

/// Semilinear generation degree, searched downward from the largest
/// Y-degree present in the slice. `None` when the slice is empty.
pub fn sgd(rees: &ReesPresentation) -> SgdReport {
    if rees.slice1.is_empty() {
        return SgdReport {
            value: None,
            ambient: None,
        };
    }
    let b_in_xy: Vec<Polynomial> = rees
        .j_basis
        .iter()
        .filter(|g| g.degree_in(0..rees.nx).unwrap_or(0) == 0)
        .cloned()
        .collect();
    let value = sgd_search(rees, &b_in_xy);
    let ambient = sgd_search(rees, &[]);
    SgdReport {
        value: Some(value),
        ambient: Some(ambient),
    }
}

fn sgd_search(rees: &ReesPresentation, extra: &[Polynomial]) -> u32 {
    let ring = &rees.ring_xy;
    let s_max = rees.slice1.iter().map(|g| y_degree(rees, g)).max().unwrap();
    let full = {
        let mut gens = extra.to_vec();
        gens.extend(rees.slice1.iter().cloned());
        Ideal::new(ring.clone(), gens)
    };
    let mut s = s_max;
    while s > 1 {
        let mut gens = extra.to_vec();
        gens.extend(
            rees.slice1
                .iter()
                .filter(|g| y_degree(rees, g) < s)
                .cloned(),
        );
        let truncated = Ideal::new(ring.clone(), gens);
        // truncated ⊆ full always; equality needs only the reverse
        if !truncated.contains_ideal(&full) {
            break;
        }
        s -= 1;
    }
    s
}

/// Codimension of the degree-1 slice ideal over `S[X]`: the dimension
/// drop from `k[X,Y]/b` to `k[X,Y]/(b + slice1)`.
pub fn slice1_codim_over_image(rees: &ReesPresentation) -> Option<usize> {
    let ring = &rees.ring_xy;
    let b_in_xy: Vec<Polynomial> = rees
        .j_basis
        .iter()
        .filter(|g| g.degree_in(0..rees.nx).unwrap_or(0) == 0)
        .cloned()
        .collect();
    let with_b = Ideal::new(ring.clone(), b_in_xy.clone());
    let mut gens = b_in_xy;
    gens.extend(rees.slice1.iter().cloned());
    let with_slice = Ideal::new(ring.clone(), gens);
    let d1 = krull_dimension(&with_b).dim?;
    let d2 = krull_dimension(&with_slice).dim?;
    Some(d1 - d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ratmap::validate_datum;
    use crate::text::parse_poly;

    fn ring(chr: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            FieldSpec::new(chr).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn datum(r: &PolyRing, a: &[&str], forms: &[&str]) -> RationalDatum {
        validate_datum(
            Ideal::new(
                r.clone(),
                a.iter().map(|s| parse_poly(s, r).unwrap()).collect(),
            ),
            forms.iter().map(|s| parse_poly(s, r).unwrap()).collect(),
            &[],
        )
        .unwrap()
    }

    #[test]
    fn identity_rees_is_koszul() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let id = datum(&r, &[], &["X0", "X1", "X2"]);
        let rees = rees_ideal(&id);
        // the three 2x2 minors of the generic 2x3 matrix
        assert_eq!(rees.j_basis.len(), 3);
        assert_eq!(rees.slice1.len(), 3);
        assert!(rees.image_ideal.is_zero());
        assert_eq!(slice(&rees, 0).len(), 0);
        // substitution soundness: each basis element vanishes at Y = f·t
        let rt = ring(0, &["x0", "x1", "x2", "s"]);
        let imgs: Vec<Polynomial> = vec![
            rt.var(0),
            rt.var(1),
            rt.var(2),
            parse_poly("x0*s", &rt).unwrap(),
            parse_poly("x1*s", &rt).unwrap(),
            parse_poly("x2*s", &rt).unwrap(),
        ];
        for g in &rees.j_basis {
            assert!(g.substitute(&imgs).unwrap().is_zero());
        }
    }

    #[test]
    fn plane_cremona_slices() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let crem = datum(&r, &[], &["X1*X2", "X0*X2", "X0*X1"]);
        let rees = rees_ideal(&crem);
        assert!(rees.image_ideal.is_zero());
        // two independent linear syzygies
        assert_eq!(rees.slice11.len(), 2);
        // the expected syzygy biforms lie in the presentation ideal
        let jb = &rees.j_basis;
        let rxy = rees.ring_xy.clone();
        for s in ["X0*Y0 - X1*Y1", "X0*Y0 - X2*Y2"] {
            let p = parse_poly(s, &rxy).unwrap();
            assert!(crate::groebner::normal_form(&p, jb).is_zero());
        }
        // every slice11 element is genuinely in J
        for p in &rees.slice11 {
            assert!(crate::groebner::normal_form(p, jb).is_zero());
        }
    }

    #[test]
    fn segre_image_from_slice_zero() {
        let r = ring(0, &["X0", "X1", "X2", "X3"]);
        let segre = datum(&r, &[], &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]);
        let rees = rees_ideal(&segre);
        let ry = rees.image_ideal.ring().clone();
        let quadric = Ideal::new(
            ry.clone(),
            vec![parse_poly("Y0*Y3 - Y1*Y2", &ry).unwrap()],
        );
        assert!(rees.image_ideal.equals(&quadric));
        // b-consistency across the two routes
        let img = crate::ratmap::image(&segre);
        assert!(img.ideal.equals(&rees.image_ideal));
    }

    #[test]
    fn phi1_of_segre_is_linearly_presented() {
        let r = ring(0, &["X0", "X1", "X2", "X3"]);
        let segre = datum(&r, &[], &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]);
        let p = phi1(&segre);
        assert_eq!(p.matrix.rows(), 4);
        assert_eq!(p.matrix.cols(), 4);
        assert_eq!(p.rank.rank, Some(3));
        // columns are genuine syzygies
        for c in 0..p.matrix.cols() {
            let mut acc = r.zero();
            for j in 0..4 {
                acc = acc.add(&p.matrix.at(j, c).mul(&segre.forms()[j]));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn bihomogeneity_of_basis() {
        let r = ring(32003, &["X0", "X1", "X2"]);
        let crem = datum(&r, &[], &["X1*X2", "X0*X2", "X0*X1"]);
        let rees = rees_ideal(&crem);
        let grading = rees.ring_xy.grading().unwrap();
        for g in &rees.j_basis {
            match g.bidegree_under(grading) {
                Bidegree::Homogeneous(_, _) => {}
                other => panic!("basis element with bidegree {:?}", other),
            }
        }
        for g in &rees.slice1 {
            match g.bidegree_under(grading) {
                Bidegree::Homogeneous(1, q) => assert!(q >= 1),
                other => panic!("slice-1 element with bidegree {:?}", other),
            }
        }
    }

    #[test]
    fn sgd_of_plane_cremona_and_identity() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let crem = datum(&r, &[], &["X1*X2", "X0*X2", "X0*X1"]);
        let rees = rees_ideal(&crem);
        assert_eq!(
            sgd(&rees),
            SgdReport {
                value: Some(1),
                ambient: Some(1)
            }
        );

        let id = datum(&r, &[], &["X0", "X1", "X2"]);
        let rees_id = rees_ideal(&id);
        assert_eq!(sgd(&rees_id).value, Some(1));
    }

    #[test]
    fn semilinear_codim_of_plane_cremona() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let crem = datum(&r, &[], &["X1*X2", "X0*X2", "X0*X1"]);
        let rees = rees_ideal(&crem);
        assert_eq!(slice1_codim_over_image(&rees), Some(2));
    }

    #[test]
    fn image_invariant_under_representative_scaling() {
        // replacing f by h*f changes the presentation ideal's ambient
        // degree but not the image ideal
        let r = ring(32003, &["X0", "X1", "X2", "X3"]);
        let segre = datum(&r, &[], &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]);
        let h = parse_poly("X0 + 3*X1 + X3", &r).unwrap();
        let scaled_forms: Vec<Polynomial> =
            segre.forms().iter().map(|f| f.mul(&h)).collect();
        let scaled = validate_datum(segre.source().clone(), scaled_forms, &[]).unwrap();
        let b1 = rees_ideal(&segre).image_ideal;
        let b2 = rees_ideal(&scaled).image_ideal;
        assert!(b1.equals(&b2));
    }

    #[test]
    #[should_panic(expected = "slices")]
    fn slice_rejects_higher_degrees() {
        let r = ring(0, &["X0", "X1", "X2"]);
        let id = datum(&r, &[], &["X0", "X1", "X2"]);
        let rees = rees_ideal(&id);
        let _ = slice(&rees, 2);
    }
}
