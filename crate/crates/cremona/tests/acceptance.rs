//! Acceptance suite: the reference fixtures with their known exact
//! values, the characteristic sweep, and the seeded property suites.
//! Every assertion is exact; run with `-- --nocapture` to see one
//! PASS line per criterion.

use cremona::field::{Coeff, FieldSpec};
use cremona::groebner::{krull_dimension, normal_form, Ideal};
use cremona::jdual::{
    analyze, koszul_hilbert_check, AnalysisOptions, BirationalityReport, KoszulCheck, Verdict,
};
use cremona::linalg::KMatrix;
use cremona::matrix::PolyMatrix;
use cremona::monomial::{Monomial, MonomialOrder};
use cremona::poly::{PolyRing, Polynomial};
use cremona::ratmap::{equivalent, validate_datum, RationalDatum};
use cremona::rees::{phi1, rees_ideal, sgd};
use cremona::text::{parse_poly, print_poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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

fn full_options() -> AnalysisOptions {
    AnalysisOptions {
        extract_inverse: true,
        sufficient_tests: true,
        ..Default::default()
    }
}

// fixture constructors, parameterized by characteristic

fn fx_quartic(chr: u64) -> RationalDatum {
    let r = ring(chr, &["X", "Y", "Z", "W"]);
    datum(&r, &[], &["X^4", "X^2*Y*W", "X*Y^2*Z", "Y^3*Z"])
}

fn fx_p5_cubic(chr: u64) -> RationalDatum {
    let r = ring(chr, &["X0", "X1", "X2", "X3", "X4", "X5"]);
    datum(
        &r,
        &[],
        &[
            "X0*X1*X2",
            "X0*X2*X3",
            "X0*X4*X5",
            "X1*X2*X4",
            "X2*X3*X5",
            "X3*X4*X5",
        ],
    )
}

fn fx_plane_cremona(chr: u64) -> RationalDatum {
    let r = ring(chr, &["X0", "X1", "X2"]);
    datum(&r, &[], &["X1*X2", "X0*X2", "X0*X1"])
}

fn fx_segre(chr: u64) -> RationalDatum {
    let r = ring(chr, &["X0", "X1", "X2", "X3"]);
    datum(&r, &[], &["X0*X2", "X0*X3", "X1*X2", "X1*X3"])
}

fn fx_identity(chr: u64, n: usize) -> RationalDatum {
    let vars: Vec<String> = (0..=n).map(|i| format!("X{}", i)).collect();
    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let r = ring(chr, &var_refs);
    let forms: Vec<&str> = var_refs.clone();
    datum(&r, &[], &forms)
}

/// Rank bounds and dimension inequality on one analyzed map
/// (criterion 7(iii) applies this to every analysis in the suite).
fn check_rank_bounds(report: &BirationalityReport, n: usize) {
    if let Some(r) = report.jdrank {
        assert!(report.dgi <= r && r <= n, "rank outside [dgi, n]");
        let plus = report.jdrank_plus.unwrap();
        assert!(plus < report.edim);
        if let (Some(dr), Some(ds)) = (report.source_dim.dim, report.image.dimension.dim) {
            assert!(dr as i64 - ds as i64 <= n as i64 - r as i64);
            if plus + 1 == report.edim {
                assert_eq!(dr, ds);
            }
        }
    }
    // sufficient tests never contradict the criterion
    if let Some(t) = &report.linear_rank {
        if t.fires {
            assert_eq!(report.verdict, Verdict::Birational);
        }
    }
    if let Some(t) = &report.semilinear {
        if t.fires {
            assert_eq!(report.verdict, Verdict::Birational);
        }
    }
}

#[test]
fn criterion_1_p3_quartic_fixture() {
    let f = fx_quartic(32003);
    let report = analyze(&f, &full_options());
    assert_eq!(report.jdrank, Some(3), "jdrank");
    assert_eq!(report.verdict, Verdict::Birational);
    let p = phi1(&f);
    assert_eq!(p.rank.rank, Some(1), "rank phi1");
    // codim of the degree-1 slice in k[X,Y] is 2: the 8-variable
    // quotient by the slice ideal has dimension 6
    let rees = rees_ideal(&f);
    let slice_ideal = Ideal::new(rees.ring_xy.clone(), rees.slice1.clone());
    assert_eq!(krull_dimension(&slice_ideal).dim, Some(6));
    assert_eq!(report.semilinear.as_ref().unwrap().codim, Some(2));
    assert!(!report.semilinear.as_ref().unwrap().fires);
    // the linear-rank sufficient test does not fire (rank 1 < 3), yet
    // the map is birational: the test is sufficient, not necessary
    let lr = report.linear_rank.as_ref().unwrap();
    assert!(lr.applicable && !lr.fires);
    check_rank_bounds(&report, 3);
    println!("PASS criterion 1: quartic fixture jdrank=3, rk(phi1)=1, slice codim 2 (dim 6)");
}

#[test]
fn criterion_2_p5_cubic_fixture() {
    let f = fx_p5_cubic(32003);
    let report = analyze(&f, &full_options());
    let lr = report.linear_rank.as_ref().unwrap();
    assert_eq!(lr.phi1_rank, Some(5), "rank phi1 maximal");
    assert!(lr.fires, "linear rank test fires");
    assert_eq!(report.verdict, Verdict::Birational);
    let inv = report.inverse.as_ref().expect("inverse extracted");
    assert_eq!(inv.degree(), 4, "inverse minimalizes to 4-forms");
    assert_eq!(report.inverse_verified, Some(true));
    check_rank_bounds(&report, 5);
    println!("PASS criterion 2: quintic-space cubic fixture rk(phi1)=5, birational, inverse degree 4");
}

#[test]
fn criterion_3_plane_quadratic_cremona() {
    let f = fx_plane_cremona(32003);
    let report = analyze(&f, &full_options());
    assert_eq!(report.verdict, Verdict::Birational);
    let inv = report.inverse.as_ref().expect("inverse extracted");
    let ry = inv.ring().clone();
    let expected = validate_datum(
        Ideal::zero(ry.clone()),
        ["Y1*Y2", "Y0*Y2", "Y0*Y1"]
            .iter()
            .map(|s| parse_poly(s, &ry).unwrap())
            .collect(),
        &[],
    )
    .unwrap();
    assert!(equivalent(inv, &expected).unwrap(), "inverse equivalent to the quadratic involution");
    assert_eq!(report.inverse_verified, Some(true), "verify_inverse true");
    // base ideal equals the 2x2 minors of the 3x2 matrix of linear syzygies
    let p = phi1(&f);
    assert_eq!(p.matrix.rows(), 3);
    assert_eq!(p.matrix.cols(), 2);
    for e in p.matrix.entries() {
        assert!(e.total_degree().is_none_or(|d| d == 1), "linear entries");
    }
    let minors = p.matrix.signed_minors_drop_row(None);
    let minor_ideal = Ideal::new(f.ring().clone(), minors);
    assert!(minor_ideal.equals(&f.base_ideal()));
    check_rank_bounds(&report, 2);
    println!("PASS criterion 3: plane Cremona birational with involution inverse; base ideal = minors of the 3x2 linear matrix");
}

#[test]
fn criterion_4_segre_fixture() {
    let f = fx_segre(32003);
    let report = analyze(&f, &full_options());
    let ry = report.image.ideal.ring().clone();
    let quadric = Ideal::new(
        ry.clone(),
        vec![parse_poly("Y0*Y3 - Y1*Y2", &ry).unwrap()],
    );
    assert_eq!(report.image.ideal.gens().len(), 1);
    assert!(report.image.ideal.equals(&quadric), "image is exactly the quadric");
    assert_eq!(report.verdict, Verdict::NotBirational);
    // linearly presented (rank 3) yet algebraically dependent
    assert_eq!(report.linear_rank.as_ref().unwrap().phi1_rank, Some(3));
    assert!(!report.linear_rank.as_ref().unwrap().fires);
    check_rank_bounds(&report, 3);
    println!("PASS criterion 4: bilinear fixture image (Y0*Y3 - Y1*Y2), not birational, phi1 rank 3");
}

#[test]
fn criterion_5_identity_maps() {
    for n in 1..=4usize {
        let f = fx_identity(32003, n);
        let report = analyze(
            &f,
            &AnalysisOptions {
                extract_inverse: true,
                ..Default::default()
            },
        );
        assert_eq!(report.jdrank, Some(n), "identity jdrank = n");
        assert_eq!(report.verdict, Verdict::Birational);
        let inv = report.inverse.as_ref().expect("inverse extracted");
        let printed: Vec<String> = inv.forms().iter().map(print_poly).collect();
        let expect: Vec<String> = (0..=n).map(|j| format!("Y{}", j)).collect();
        assert_eq!(printed, expect, "inverse minimalizes to the identity datum");
        check_rank_bounds(&report, n);
    }
    println!("PASS criterion 5: identity maps n=1..4 have jdrank n and identity inverses");
}

#[test]
fn criterion_6_characteristic_sweep() {
    // fixtures 1-5 over F2, F3, F5 agree exactly with the F32003 runs
    let sweep = [2u64, 3, 5];
    let baseline = 32003u64;

    let run = |f: &RationalDatum| {
        let report = analyze(
            f,
            &AnalysisOptions {
                extract_inverse: true,
                ..Default::default()
            },
        );
        check_rank_bounds(&report, f.source_n());
        (
            report.verdict,
            report.jdrank,
            report.inverse.as_ref().map(|d| d.degree()),
        )
    };

    type Fixture = (&'static str, fn(u64) -> RationalDatum);
    let fixtures: Vec<Fixture> = vec![
        ("quartic", fx_quartic as fn(u64) -> RationalDatum),
        ("p5cubic", fx_p5_cubic),
        ("cremona2", fx_plane_cremona),
        ("segre", fx_segre),
        ("identity4", |chr| fx_identity(chr, 4)),
    ];
    for (name, fx) in &fixtures {
        let base = run(&fx(baseline));
        for &chr in &sweep {
            let got = run(&fx(chr));
            assert_eq!(got.0, base.0, "{} verdict over F_{}", name, chr);
            assert_eq!(got.1, base.1, "{} jdrank over F_{}", name, chr);
        }
    }
    println!("PASS criterion 6: verdicts and jdranks identical over F2, F3, F5");
}

#[test]
fn criterion_7i_koszul_membership_property() {
    // random (n+1) x n matrices, entries of degree <= 1 over F5
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let r = ring(5, &["Y0", "Y1", "Y2"]);
    let field = r.field().clone();
    let mut cases = 0;
    for trial in 0..102 {
        let n = 1 + (trial % 3); // n in {1, 2, 3}
        let mut entries = Vec::with_capacity((n + 1) * n);
        for _ in 0..(n + 1) * n {
            // random affine-linear polynomial
            let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
            for v in 0..3 {
                let c = rng.gen_range(0..5i64);
                if c != 0 {
                    terms.push((Monomial::var(3, v), field.from_i64(c)));
                }
            }
            let c = rng.gen_range(0..5i64);
            if c != 0 {
                terms.push((Monomial::one(3), field.from_i64(c)));
            }
            entries.push(r.from_terms(terms));
        }
        let rho = PolyMatrix::new(r.clone(), n + 1, n, entries);
        assert_eq!(
            koszul_hilbert_check(&rho),
            KoszulCheck::AllCertified,
            "trial {}",
            trial
        );
        cases += 1;
    }
    assert!(cases >= 100);
    println!("PASS criterion 7(i): Koszul membership certified on {} random matrices", cases);
}

#[test]
fn criterion_7ii_representative_and_coordinate_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBADA55);
    let chr = 32003u64;
    let fixtures: Vec<RationalDatum> = vec![
        fx_plane_cremona(chr),
        fx_segre(chr),
        fx_identity(chr, 1),
        fx_identity(chr, 2),
        fx_identity(chr, 3),
    ];
    let opts = AnalysisOptions {
        extract_inverse: true,
        ..Default::default()
    };
    let baselines: Vec<BirationalityReport> =
        fixtures.iter().map(|f| analyze(f, &opts)).collect();

    let mut cases = 0;
    for round in 0..110 {
        let idx = round % fixtures.len();
        let f = &fixtures[idx];
        let base = &baselines[idx];
        let r = f.ring().clone();
        let nv = r.nvars();
        if round % 2 == 0 {
            // representative invariance: multiply by a random nonzero linear form
            let h = loop {
                let terms: Vec<(Monomial, Coeff)> = (0..nv)
                    .filter_map(|v| {
                        let c = rng.gen_range(0..chr as i64);
                        (c != 0).then(|| (Monomial::var(nv, v), r.field().from_i64(c)))
                    })
                    .collect();
                if !terms.is_empty() {
                    break r.from_terms(terms);
                }
            };
            let scaled: Vec<Polynomial> = f.forms().iter().map(|p| p.mul(&h)).collect();
            let scaled_datum = validate_datum(f.source().clone(), scaled, &[]).unwrap();
            let report = analyze(&scaled_datum, &opts);
            assert_eq!(report.verdict, base.verdict, "verdict invariance");
            assert_eq!(report.jdrank, base.jdrank, "jdrank invariance");
            if let (Some(inv), Some(base_inv)) = (&report.inverse, &base.inverse) {
                assert!(
                    equivalent(inv, base_inv).unwrap(),
                    "inverse equivalent under representative change"
                );
            } else {
                assert_eq!(report.inverse.is_some(), base.inverse.is_some());
            }
            check_rank_bounds(&report, f.source_n());
        } else {
            // coordinate-change invariance: precompose with a random
            // invertible linear substitution
            let subst = loop {
                let entries: Vec<i64> = (0..nv * nv).map(|_| rng.gen_range(0..chr as i64)).collect();
                let mut km = KMatrix::zero(r.field().clone(), nv, nv);
                for (i, v) in entries.iter().enumerate() {
                    km.data[i] = r.field().from_i64(*v);
                }
                if km.clone().rank() == nv {
                    break entries;
                }
            };
            let images: Vec<Polynomial> = (0..nv)
                .map(|i| {
                    let terms: Vec<(Monomial, Coeff)> = (0..nv)
                        .filter_map(|j| {
                            let c = subst[i * nv + j];
                            (c != 0).then(|| (Monomial::var(nv, j), r.field().from_i64(c)))
                        })
                        .collect();
                    r.from_terms(terms)
                })
                .collect();
            let moved: Vec<Polynomial> = f
                .forms()
                .iter()
                .map(|p| p.substitute(&images).unwrap())
                .collect();
            let moved_datum = validate_datum(f.source().clone(), moved, &[]).unwrap();
            let report = analyze(&moved_datum, &opts);
            assert_eq!(report.verdict, base.verdict, "verdict under coordinate change");
            assert_eq!(report.jdrank, base.jdrank, "jdrank under coordinate change");
            check_rank_bounds(&report, f.source_n());
        }
        cases += 1;
    }
    assert!(cases >= 100);
    println!(
        "PASS criterion 7(ii)+(iii): verdict/jdrank invariance and rank bounds on {} analyzed maps",
        cases
    );
}

fn random_poly(rng: &mut ChaCha8Rng, r: &PolyRing, max_deg: u32, chr: i64) -> Polynomial {
    let nv = r.nvars();
    let nterms = rng.gen_range(1..=3);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let mut exps = vec![0u32; nv];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            exps[rng.gen_range(0..nv)] += 1;
        }
        let c = rng.gen_range(1..chr);
        terms.push((Monomial::new(exps), r.field().from_i64(c)));
    }
    r.from_terms(terms)
}

#[test]
fn criterion_7iv_groebner_engine_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let chr = 5i64;
    let r = ring(5, &["X0", "X1", "X2"]);
    let field = r.field().clone();
    let mut cases = 0;
    for trial in 0..105 {
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| random_poly(&mut rng, &r, 2, chr))
            .collect();
        let ideal = Ideal::new(r.clone(), gens.clone());
        let gb = ideal.gb();

        // Buchberger criterion: every S-polynomial reduces to zero
        for a in 0..gb.len() {
            for b in (a + 1)..gb.len() {
                let la = gb[a].leading_monomial().unwrap();
                let lb = gb[b].leading_monomial().unwrap();
                let lcm = la.lcm(lb);
                let ma = la.quotient_into(&lcm);
                let mb = lb.quotient_into(&lcm);
                let ca = field.inv(gb[a].leading_coeff().unwrap()).unwrap();
                let cb = field.inv(gb[b].leading_coeff().unwrap()).unwrap();
                let s = gb[a].mul_term(&ma, &ca).sub(&gb[b].mul_term(&mb, &cb));
                assert!(normal_form(&s, &gb).is_zero(), "S-poly trial {}", trial);
            }
        }

        // elimination agrees with brute-force linear algebra in degree <= 6
        let elim = cremona::groebner::eliminate(&ideal, &[0]);
        let bound = 6u32;
        let monos = monomials_up_to(3, bound);
        // column order: X0-involving monomials first
        let mut order: Vec<usize> = (0..monos.len()).collect();
        order.sort_by_key(|&i| (monos[i].exp(0) == 0, i));
        let col_of: std::collections::HashMap<Monomial, usize> = order
            .iter()
            .enumerate()
            .map(|(c, &i)| (monos[i].clone(), c))
            .collect();
        let first_free_col = order
            .iter()
            .position(|&i| monos[i].exp(0) == 0)
            .unwrap_or(monos.len());
        // rows: multiples m*g of degree <= 6
        let mut rows: Vec<Polynomial> = Vec::new();
        for g in &gens {
            let gd = g.total_degree().unwrap_or(0);
            for m in &monos {
                if m.degree() + gd <= bound {
                    rows.push(g.mul_term(m, &field.one()));
                }
            }
        }
        let mut km = KMatrix::zero(field.clone(), rows.len().max(1), monos.len());
        for (ri, p) in rows.iter().enumerate() {
            for (m, c) in p.terms() {
                km.set(ri, col_of[m], c.clone());
            }
        }
        km.rref();
        // echelon rows supported entirely on X0-free columns span the
        // degree-bounded part of the elimination ideal
        let mut brute: Vec<Polynomial> = Vec::new();
        'rows: for ri in 0..km.rows {
            let mut terms = Vec::new();
            let mut any = false;
            for c in 0..km.cols {
                let v = km.at(ri, c);
                if field.is_zero(v) {
                    continue;
                }
                any = true;
                if c < first_free_col {
                    continue 'rows; // touches an X0 monomial
                }
                terms.push((monos[order[c]].clone(), v.clone()));
            }
            if any {
                brute.push(r.from_terms(terms));
            }
        }
        // (a) every brute-force element lies in the elimination ideal
        let elim_in_r = Ideal::new(
            r.clone(),
            elim.gens()
                .iter()
                .map(|g| {
                    // elimination lives in k[X1,X2]; transport back
                    g.map_into(&r, &[Some(1), Some(2)])
                })
                .collect(),
        );
        for p in &brute {
            assert!(elim_in_r.contains(p), "brute element outside eliminate, trial {}", trial);
        }
        // (b) low-degree elimination generators lie in the brute span
        let brute_ideal_check = |p: &Polynomial| -> bool {
            // membership in the k-span via one more echelon solve
            let mut km2 = KMatrix::zero(field.clone(), brute.len().max(1), monos.len());
            for (ri, q) in brute.iter().enumerate() {
                for (m, c) in q.terms() {
                    km2.set(ri, col_of[m], c.clone());
                }
            }
            let mut target = vec![field.zero(); monos.len()];
            for (m, c) in p.terms() {
                target[col_of[m]] = c.clone();
            }
            // span membership: rank unchanged when adding the target row
            let base_rank = km2.clone().rank();
            let mut ext = KMatrix::zero(field.clone(), km2.rows + 1, monos.len());
            ext.data[..km2.data.len()].clone_from_slice(&km2.data);
            for (c, v) in target.iter().enumerate() {
                ext.set(km2.rows, c, v.clone());
            }
            ext.rank() == base_rank
        };
        for g in elim_in_r.gens() {
            if g.total_degree().unwrap_or(0) <= bound {
                assert!(brute_ideal_check(g), "eliminate generator outside brute span, trial {}", trial);
            }
        }
        cases += 1;
    }
    assert!(cases >= 100);
    println!(
        "PASS criterion 7(iv): Buchberger criterion and elimination-vs-brute-force agreement on {} random ideals",
        cases
    );
}

fn monomials_up_to(nvars: usize, bound: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == nvars {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(nvars, pos + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, 0, bound, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

#[test]
fn criterion_8_sgd_crude_bound() {
    // fixture 2: inverse degree 4, n = 5
    let f5 = fx_p5_cubic(32003);
    let report5 = analyze(&f5, &full_options());
    let inv_deg5 = report5.inverse.as_ref().unwrap().degree();
    let sgd5 = report5.sgd.unwrap().value.unwrap();
    assert!(sgd5 >= inv_deg5.div_ceil(5), "sgd >= ceil(deg(inverse)/n)");

    // fixture 3: inverse degree 2, n = 2, sgd exactly 1
    let f3 = fx_plane_cremona(32003);
    let report3 = analyze(&f3, &full_options());
    let inv_deg3 = report3.inverse.as_ref().unwrap().degree();
    let sgd3 = report3.sgd.unwrap().value.unwrap();
    assert!(sgd3 >= inv_deg3.div_ceil(2));
    assert_eq!(sgd3, 1, "plane Cremona sgd is exactly 1");
    println!("PASS criterion 8: sgd bounds hold (p5: {} >= 1, plane: {} = 1)", sgd5, sgd3);
}

#[test]
fn criterion_9_linear_type_inverse_degree() {
    // plane quadratic map: almost complete intersection of linear type,
    // so the extracted minimal inverse has degree <= n = 2
    let f = fx_plane_cremona(32003);
    let report = analyze(&f, &full_options());
    let inv = report.inverse.as_ref().unwrap();
    assert!(inv.degree() <= 2);
    println!("PASS criterion 9: plane Cremona minimal inverse degree {} <= 2", inv.degree());
}

#[test]
fn sgd_undefined_when_slice_empty() {
    // no linear part anywhere: generic-enough quadrics on P^1 have
    // nontrivial slice1, so use a map with empty slice1 instead:
    // (X0^2, X1^2) on P^1 has the Koszul syzygy in degree (2,*)? the
    // slice may be nonempty; just assert the report shape is consistent
    let r = ring(32003, &["X0", "X1"]);
    let f = datum(&r, &[], &["X0^2", "X1^2"]);
    let rees = rees_ideal(&f);
    let s = sgd(&rees);
    match s.value {
        Some(v) => assert!(v >= 1),
        None => assert!(rees.slice1.is_empty()),
    }
}
