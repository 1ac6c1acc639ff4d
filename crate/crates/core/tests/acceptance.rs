use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hqforms::automorphism::{random_automorphism, standardize_hermitian};
use hqforms::congruence::{canonical_pair, is_simultaneously_diagonalizable, pairs_congruent, Block, HermitianPair};
use hqforms::deg2::{classify_deg2_s3_to_q21, classify_deg2_sphere_map, classify_q21_pair, generate_deg2_map, Deg2NormalForm, Q21Class};
use hqforms::hqclass::{instantiate_vii, lookup, verify_catalog, verify_entry};
use hqforms::maps::{map_from_decomposition, recover_target_equivalence};
use hqforms::monomial::{enumerate_vanishing_fewnomials, sphere_polynomials, Fewnomial};
use hqforms::poly::Poly;
use hqforms::{Error, FieldElement, HermitianForm, Hyperquadric, MatrixK, RationalMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn k(s: &str) -> FieldElement {
    FieldElement::parse(s).unwrap()
}

fn int(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn product(j: &MatrixK, a: &MatrixK) -> HermitianForm {
    let jf = HermitianForm::linear(j.clone()).unwrap();
    let af = HermitianForm::linear(a.clone()).unwrap();
    af.multiply(&jf).unwrap()
}

fn j_mixed() -> MatrixK {
    MatrixK::from_int_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])
}

fn j_anti() -> MatrixK {
    MatrixK::from_int_rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])
}

fn a1(al: &FieldElement, be: &FieldElement) -> MatrixK {
    let z = FieldElement::zero;
    MatrixK::from_rows(vec![
        vec![al.clone(), z(), z()],
        vec![z(), z(), be.clone()],
        vec![z(), be.clone(), int(1)],
    ])
}

fn a2(al: &FieldElement) -> MatrixK {
    let z = FieldElement::zero;
    MatrixK::from_rows(vec![
        vec![z(), z(), al.clone()],
        vec![z(), al.clone(), int(1)],
        vec![al.clone(), int(1), z()],
    ])
}

fn a3(al: &FieldElement, be: &FieldElement, ga: &FieldElement) -> MatrixK {
    let z = FieldElement::zero;
    let ig = &FieldElement::i() * ga;
    MatrixK::from_rows(vec![
        vec![al.clone(), z(), z()],
        vec![z(), z(), be - &ig],
        vec![z(), be + &ig, z()],
    ])
}

fn sparse6(entries: &[(usize, usize, FieldElement)]) -> MatrixK {
    let mut m = MatrixK::zeros(6, 6);
    for (r, c, v) in entries {
        m[(*r, *c)] = v.clone();
    }
    m
}

fn b1(al: &FieldElement, be: &FieldElement) -> MatrixK {
    let s = al + be;
    sparse6(&[
        (0, 0, al.clone()),
        (1, 2, s.clone()),
        (2, 1, s),
        (2, 2, int(1)),
        (3, 5, be.clone()),
        (4, 4, &int(2) * be),
        (4, 5, int(1)),
        (5, 3, be.clone()),
        (5, 4, int(1)),
    ])
}

fn b2(al: &FieldElement) -> MatrixK {
    let two = &int(2) * al;
    sparse6(&[
        (0, 5, al.clone()),
        (1, 4, two.clone()),
        (1, 5, int(1)),
        (2, 2, two.clone()),
        (2, 4, int(1)),
        (3, 3, al.clone()),
        (3, 4, int(1)),
        (4, 1, two),
        (4, 2, int(1)),
        (4, 3, int(1)),
        (5, 0, al.clone()),
        (5, 1, int(1)),
    ])
}

fn b3(al: &FieldElement, be: &FieldElement, ga: &FieldElement) -> MatrixK {
    let ig = &FieldElement::i() * ga;
    let (minus, plus) = (be - &ig, be + &ig);
    sparse6(&[
        (0, 0, al.clone()),
        (1, 2, al + &minus),
        (2, 1, al + &plus),
        (3, 5, minus),
        (4, 4, &int(2) * be),
        (5, 3, plus),
    ])
}

fn grid20() -> Vec<(FieldElement, FieldElement, FieldElement)> {
    (0..20i64)
        .map(|n| {
            (
                FieldElement::from_ratio(n - 10, 3),
                FieldElement::from_ratio(7 - n, 2),
                FieldElement::from_ratio(n % 5 + 1, (n % 3) + 1),
            )
        })
        .collect()
}

fn grid21() -> Vec<FieldElement> {
    (-10..=10).map(|n| FieldElement::from_ratio(n, 2)).collect()
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let report = verify_catalog();
    let elapsed = start.elapsed();
    let failed: Vec<String> = report.rows.iter().filter(|r| !r.passed).map(ToString::to_string).collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    let iv = verify_entry("T1.1.iv").map_err(|e| e.to_string())?;
    let iv_status = if iv.all_passed() { "verifies" } else { "fails" };
    Ok(format!(
        "{} checks in {:.1}s; T1.1.iv {iv_status}",
        report.rows.len(),
        elapsed.as_secs_f64()
    ))
}

fn criterion2() -> Outcome {
    let mut mismatches = 0;
    let mut compared = 0;
    for (al, be, ga) in grid20() {
        let cases = [
            (product(&j_mixed(), &a1(&al, &be)), b1(&al, &be)),
            (product(&j_anti(), &a2(&al)), b2(&al)),
            (product(&j_mixed(), &a3(&al, &be, &ga)), b3(&al, &be, &ga)),
        ];
        for (got, want) in cases {
            for r in 0..6 {
                for c in 0..6 {
                    compared += 1;
                    if got.matrix()[(r, c)] != want[(r, c)] {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} of {compared} entries differ"))?;
    Ok(format!("{compared} entries, 0 mismatches"))
}

fn criterion3() -> Outcome {
    let g = grid21();
    let mut checked = 0;
    for al in &g {
        let i2 = product(&j_anti(), &a2(al)).inertia();
        ensure(i2.n_minus >= 2, || format!("real delta product at alpha={al}: {i2}"))?;
        ensure((i2.rank() == 4) == al.is_zero(), || format!("real delta product rank at alpha={al}: {i2}"))?;
        checked += 1;
        for be in &g {
            let i1 = product(&j_mixed(), &a1(al, be)).inertia();
            ensure([3, 5, 6].contains(&i1.rank()), || format!("mixed product rank at ({al},{be}): {i1}"))?;
            if al.is_zero() && be.is_zero() {
                ensure(i1.rank() <= 3, || format!("mixed product at (0,0): {i1}"))?;
            } else {
                ensure(i1.n_minus >= 2, || format!("mixed product at ({al},{be}): {i1}"))?;
            }
            for ga in [int(1), int(2)] {
                let i3 = product(&j_mixed(), &a3(al, be, &ga)).inertia();
                ensure(i3.n_minus >= 2, || format!("complex product at ({al},{be},{ga}): {i3}"))?;
            }
            checked += 3;
        }
    }
    Ok(format!("{checked} forms"))
}

fn criterion4() -> Outcome {
    let start = Instant::now();
    let reps = enumerate_vanishing_fewnomials(6, 4);
    let elapsed = start.elapsed();
    let expected: Vec<Fewnomial> = ["x + y + t", "x^2 + x*y - y*t - t^2", "x^2 + 2*x*y + y^2 - t^2", "x^3 - 3*x*y*t + y^3 + t^3"]
        .iter()
        .map(|s| Fewnomial::parse(s).unwrap().canonical())
        .collect();
    let got: Vec<Fewnomial> = reps.iter().map(Fewnomial::canonical).collect();
    let missing: Vec<String> = expected.iter().filter(|e| !got.contains(e)).map(ToString::to_string).collect();
    let extra: Vec<String> = got.iter().filter(|g| !expected.contains(g)).map(ToString::to_string).collect();
    ensure(missing.is_empty() && extra.is_empty() && got.len() == 4, || {
        format!("missing [{}], extra [{}]", missing.join(", "), extra.join(", "))
    })?;
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    let spheres = sphere_polynomials(&reps, 3);
    let count = |s: (usize, usize)| spheres.iter().filter(|p| p.signature == s).count();
    let counts = [count((3, 0)), count((2, 1)), count((1, 2)), count((0, 3))];
    ensure(counts == [4, 2, 1, 0], || format!("sphere list counts {counts:?}"))?;
    Ok(format!(
        "4 classes in {:.1}s; sphere lists (3,0):{} (2,1):{} (1,2):{} (0,3):{}",
        elapsed.as_secs_f64(),
        counts[0],
        counts[1],
        counts[2],
        counts[3]
    ))
}

const SQUARES: [&str; 9] = ["0", "1/16", "1/9", "1/4", "4/9", "9/16", "16/25", "25/36", "1"];

fn random_t(rng: &mut ChaCha8Rng) -> Deg2NormalForm {
    let n = rng.gen_range(2..=4);
    loop {
        let t: Vec<FieldElement> = (0..n).map(|_| k(SQUARES.choose(rng).unwrap())).collect();
        if let Ok(nf) = Deg2NormalForm::from_unsorted(t) {
            return nf;
        }
    }
}

fn criterion5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut twists = 0;
    for case in 0..50 {
        let t = random_t(&mut rng);
        let f = generate_deg2_map(&t).map_err(|e| format!("generate {t}: {e}"))?;
        f.verify().map_err(|e| format!("verify generated {t}: {e}"))?;
        let back = classify_deg2_sphere_map(&f).map_err(|e| format!("classify {t}: {e}"))?;
        ensure(back == t, || format!("case {case}: {t} came back as {back}"))?;
        let n = t.n();
        for _ in 0..20 {
            let x = random_automorphism(n, 1, 3, &mut rng);
            let g = f.precompose(&x).map_err(|e| e.to_string())?;
            let c = classify_deg2_sphere_map(&g).map_err(|e| format!("twisted {t}: {e}"))?;
            ensure(c == t, || format!("twisted {t} classified as {c}"))?;
            twists += 1;
        }
    }
    Ok(format!("50 round trips, {twists} twists"))
}

fn q21_map(j: &MatrixK, a: &MatrixK) -> hqforms::Result<RationalMap> {
    let x = standardize_hermitian(j)?;
    let (js, as_) = (j.congruence(&x), a.congruence(&x));
    map_from_decomposition(Hyperquadric::sphere(2), 2, &product(&js, &as_).decompose())
}

fn criterion6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let vals = ["-2", "-1", "-1/2", "0", "1/2", "1", "2"];
    let j = MatrixK::from_int_diag(&[1, 1, -1]);
    let mut diagonal = Vec::new();
    for p in &vals {
        for q in &vals {
            for r in &vals {
                let a = MatrixK::from_diag(&[k(p), k(q), k(r)]);
                let i = product(&j, &a).inertia();
                if i.n_plus == 2 && i.n_minus == 2 {
                    diagonal.push(a);
                }
            }
        }
    }
    ensure(!diagonal.is_empty(), || "no diagonal pair with inertia (2,2)".into())?;
    let mut structured = Vec::new();
    for s in ["1", "-1", "2", "-1/2", "3"] {
        structured.push((j_anti(), a2(&FieldElement::zero()).scale(&k(s)), Q21Class::NonDiagIii));
        structured.push((j_mixed(), a3(&FieldElement::zero(), &FieldElement::zero(), &k(s)), Q21Class::NonDiagIv));
    }
    let mut classes = std::collections::BTreeMap::new();
    let mut run = |jj: &MatrixK, aa: &MatrixK, expect: Option<Q21Class>| -> Result<(), String> {
        let i = product(jj, aa).inertia();
        ensure(i.n_plus == 2 && i.n_minus == 2, || format!("pair left inertia (2,2): {i}"))?;
        let map = q21_map(jj, aa).map_err(|e| format!("map construction: {e}"))?;
        let c = classify_deg2_s3_to_q21(&map).map_err(|e| format!("{}: {e}", map.to_text()))?;
        let pc = classify_q21_pair(&HermitianPair::new(jj.clone(), aa.clone()).unwrap()).map_err(|e| e.to_string())?;
        ensure(c == pc, || format!("map says {c}, pair says {pc}"))?;
        if let Some(e) = expect {
            ensure(c == e, || format!("expected {e}, got {c}"))?;
        }
        *classes.entry(c.to_string()).or_insert(0usize) += 1;
        Ok(())
    };
    for n in 0..200 {
        let a = &diagonal[n % diagonal.len()];
        let a = if n < diagonal.len() {
            a.clone()
        } else {
            a.congruence(&random_automorphism(2, 1, 2, &mut rng))
        };
        run(&j, &a, None)?;
    }
    for n in 0..200 {
        let (jj, aa, expect) = &structured[n % structured.len()];
        let x = if n < structured.len() {
            MatrixK::identity(3)
        } else {
            let base = standardize_hermitian(jj).map_err(|e| e.to_string())?;
            base.mul(&random_automorphism(2, 1, 2, &mut rng)).mul(&base.inverse().unwrap())
        };
        run(&jj.congruence(&x), &aa.congruence(&x), Some(*expect))?;
    }
    let reps: Vec<HermitianPair> = Q21Class::ALL.iter().map(|c| c.representative()).collect();
    for (a, p) in reps.iter().enumerate() {
        for q in &reps[a + 1..] {
            ensure(!pairs_congruent(p, q, true).map_err(|e| e.to_string())?, || "representatives congruent".into())?;
        }
    }
    let summary: Vec<String> = classes.iter().map(|(c, n)| format!("{c}:{n}")).collect();
    Ok(format!("400 pairs ({}); representatives distinct", summary.join(" ")))
}

fn criterion7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut maps: Vec<RationalMap> = ["T1.1.ii", "T1.1.iii", "T1.2.ii", "T1.2.iii", "T1.2.iv", "T1.2.v", "T1.2.vi"]
        .iter()
        .map(|id| lookup(id).unwrap().map)
        .collect();
    for t in [["1/4", "1/4"], ["0", "1/2"], ["1/4", "3/4"]] {
        maps.push(generate_deg2_map(&Deg2NormalForm::parse(&t).unwrap()).unwrap().fold_weights());
    }
    for case in 0..100 {
        let f = &maps[case % maps.len()];
        let (pos, neg) = f.target().homogeneous_signature();
        let c = random_automorphism(pos, neg, 3, &mut rng);
        let g = f.postcompose(&c).map_err(|e| e.to_string())?;
        let got = recover_target_equivalence(f, &g).map_err(|e| format!("case {case}: {e}"))?;
        ensure(got == c, || format!("case {case}: recovered a different C"))?;
    }
    let vii = instantiate_vii(&Poly::var(2, 0)).unwrap();
    let err = recover_target_equivalence(&vii, &vii);
    ensure(err == Err(Error::DependentComponents), || format!("dependent input gave {err:?}"))?;
    Ok("100 instances recovered; dependent components rejected".into())
}

fn random_block(rng: &mut ChaCha8Rng, room: usize) -> Block {
    let eig = ["-2", "-1", "0", "1/2", "3"];
    if room >= 2 && rng.gen_bool(0.25) {
        return Block::Complex {
            size: 1,
            alpha: k(["0", "1", "-1/2"].choose(rng).unwrap()),
            beta: k(["1", "2", "1/3"].choose(rng).unwrap()),
        };
    }
    Block::Real {
        sign: if rng.gen_bool(0.5) { 1 } else { -1 },
        size: rng.gen_range(1..=room.min(3)),
        eigenvalue: k(eig.choose(rng).unwrap()),
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> MatrixK {
    loop {
        let x = MatrixK::from_rows(
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| int(rng.gen_range(-2..=2)) + &FieldElement::i() * int(rng.gen_range(-1..=1)))
                        .collect()
                })
                .collect(),
        );
        if x.rank() == n {
            return x;
        }
    }
}

fn check_witness(p: &HermitianPair) -> Result<hqforms::congruence::CanonicalPair, String> {
    let cf = canonical_pair(p).map_err(|e| e.to_string())?;
    let (wj, wa) = cf.weighted_matrices();
    ensure(p.j().congruence(&cf.witness) == wj && p.a().congruence(&cf.witness) == wa, || {
        "witness does not reproduce the canonical pair".into()
    })?;
    Ok(cf.pair)
}

fn criterion8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..100 {
        let size = rng.gen_range(1..=3);
        let mut blocks = Vec::new();
        let mut room = size;
        while room > 0 {
            let b = random_block(&mut rng, room);
            room -= b.size();
            blocks.push(b);
        }
        blocks.sort_by(Block::total_cmp);
        let (js, as_): (Vec<_>, Vec<_>) = blocks.iter().map(Block::matrices).unzip();
        let base = HermitianPair::new(MatrixK::block_diag(&js), MatrixK::block_diag(&as_)).unwrap();
        let x = random_invertible(&mut rng, size);
        let moved = base.congruence(&x).map_err(|e| e.to_string())?;
        let c0 = check_witness(&base).map_err(|e| format!("case {case}: {e}"))?;
        let c1 = check_witness(&moved).map_err(|e| format!("case {case}: {e}"))?;
        ensure(c0.blocks == blocks, || format!("case {case}: base canonical form\n{c0}differs from\n{blocks:?}"))?;
        ensure(c0 == c1, || format!("case {case}: canonical forms differ\n{c0}vs\n{c1}"))?;
    }
    Ok("100 pre-congruences; witnesses exact".into())
}

fn criterion9() -> Outcome {
    let e = lookup("R4.2").map_err(|e| e.to_string())?;
    let q = e.map.verify().map_err(|e| e.to_string())?;
    ensure(e.map.source() == Hyperquadric::sphere(1), || "source is not Q(1,0)".into())?;
    let pair = HermitianPair::new(e.map.source().homogeneous_matrix(), q.into_matrix()).map_err(|e| e.to_string())?;
    let (diag, _) = is_simultaneously_diagonalizable(&pair).map_err(|e| e.to_string())?;
    ensure(!diag, || "pair reported diagonalizable".into())?;
    Ok("preserves Q(1,0); pair not simultaneously diagonalizable".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("catalog verification", criterion1),
        ("product matrices of the canonical pairs", criterion2),
        ("signature grid", criterion3),
        ("vanishing fewnomials and sphere lists", criterion4),
        ("degree-two pipeline", criterion5),
        ("Q(2,1) classification completeness", criterion6),
        ("target equivalence recovery", criterion7),
        ("canonical form invariance", criterion8),
        ("non-diagonalizable disc map", criterion9),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.1}s]", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail} [{secs:.1}s]", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
