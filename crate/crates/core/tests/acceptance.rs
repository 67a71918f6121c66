//! Acceptance criteria 1-11. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::time::{Duration, Instant};
use zic_core::arith::{
    dot, promote_vec, Integer, Matrix, MultiQuad, QuadExt, Rational, Ring, Sign,
};
use zic_core::cone::{
    eigenvector_on_cone, from_coords, phi, quadratic_form, standard_tangent, tangent_form_at,
    trace_zero_coords,
};
use zic_core::free::{enumerate_reduced, FreeWord, TupleWord};
use zic_core::io::instance_to_file;
use zic_core::presentation::{mihailova, samples};
use zic_core::reductions::{
    build_stabilizer, build_ulcp_for, build_urcp, decide_membership_batch, documented_depth,
    external_to_corner, internal_to_corner, orientation_witness, Membership, ProblemInstance,
};
use zic_core::schottky::{hyperbolicity_scan, injectivity_scan, Injectivity, SchottkyPair};
use zic_core::search::{
    bfs_search, explore, holds, letters, verify_certificate, Control, GenWord, Outcome, Predicate,
    SearchInstance, DEFAULT_BUDGET,
};

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{what} took {elapsed:.2?}, limit {limit:.0?}")
    })
}

type M2 = [i64; 4];

fn m2_mul(x: &M2, y: &M2) -> M2 {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

fn m2_inv(x: &M2) -> M2 {
    [x[3], -x[1], -x[2], x[0]]
}

const S1: M2 = [3, 2, 1, 1];
const S2: M2 = [1, 1, 2, 3];

fn m2_letter(l: i32) -> M2 {
    match l {
        1 => S1,
        -1 => m2_inv(&S1),
        2 => S2,
        _ => m2_inv(&S2),
    }
}

/// Reduced words over `a, b` of length at most `depth`, built without the
/// library enumerator.
fn words_by_hand(depth: usize) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &layer {
            for l in [1, -1, 2, -2] {
                if w.last() != Some(&-l) {
                    let mut w2: Vec<i32> = w.clone();
                    w2.push(l);
                    next.push(w2);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn word(s: &str) -> FreeWord {
    FreeWord::parse(2, s).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<i32> = Vec::new();
    while letters.len() < len {
        let l = [1, -1, 2, -2][rng.gen_range(0..4)];
        if letters.last() != Some(&-l) {
            letters.push(l);
        }
    }
    FreeWord::new(2, &letters).unwrap()
}

fn criterion_1() -> Verdict {
    let by_hand = [S1, S2, m2_inv(&S1), m2_inv(&S2)]
        .iter()
        .fold([1, 0, 0, 1], |acc, m| m2_mul(&acc, m));
    let expected = by_hand[0] + by_hand[3];
    let start = Instant::now();
    let pair = SchottkyPair::canonical();
    let t = pair.commutator_trace();
    let elapsed = start.elapsed();
    ensure(expected == -25, || {
        format!("hand multiplication gives {expected}")
    })?;
    ensure(t == Integer::from(expected), || {
        format!("library trace {t}, hand {expected}")
    })?;
    ensure(t < Integer::from(-2), || {
        format!("trace {t} is not below -2")
    })?;
    within(elapsed, Duration::from_millis(1), "commutator trace")?;
    Ok(format!("Tr = {t}, {elapsed:.1?}"))
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let pair = SchottkyPair::canonical();
    let report = hyperbolicity_scan(&pair, 8);
    let inj = injectivity_scan(&pair, 6);
    let elapsed = start.elapsed();

    let words = words_by_hand(8);
    let mut distinct = HashSet::new();
    let mut oracle_count = 0u64;
    for w in &words {
        let m = w
            .iter()
            .fold([1, 0, 0, 1], |acc, &l| m2_mul(&acc, &m2_letter(l)));
        if !w.is_empty() {
            oracle_count += 1;
            ensure((m[0] + m[3]).abs() > 2, || {
                format!("oracle: |Tr| <= 2 at {w:?}")
            })?;
            ensure(m[0] * m[3] - m[1] * m[2] == 1, || {
                format!("oracle: det != 1 at {w:?}")
            })?;
        }
        if w.len() <= 6 {
            ensure(distinct.insert(m), || {
                format!("oracle: repeated matrix at {w:?}")
            })?;
        }
    }
    let formula: u64 = (1..=8).map(|l| 4 * 3u64.pow(l - 1)).sum();
    ensure(oracle_count == formula, || {
        format!("oracle counted {oracle_count} words, formula {formula}")
    })?;
    ensure(report.violations.is_empty(), || {
        format!("violations {:?}", report.violations)
    })?;
    ensure(report.words_checked == oracle_count, || {
        format!(
            "library checked {} words, oracle {oracle_count}",
            report.words_checked
        )
    })?;
    let short = distinct.len() as u64;
    ensure(inj == Injectivity::Injective { words: short }, || {
        format!("injectivity {inj:?}, oracle {short}")
    })?;
    within(elapsed, Duration::from_secs(10), "scan")?;
    Ok(format!(
        "{} nonidentity words, min |Tr| {}, {short} distinct at length <= 6, {elapsed:.2?}",
        report.words_checked,
        report.min_abs_trace.unwrap()
    ))
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let pair = SchottkyPair::canonical();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let words: Vec<FreeWord> = (0..500).map(|_| random_word(&mut rng, 10)).collect();
    for pair_idx in 0..500 {
        let (u, v) = (&words[pair_idx], &words[(pair_idx * 7 + 1) % 500]);
        let (m, n) = (pair.eval_word(u).map_err(e)?, pair.eval_word(v).map_err(e)?);
        let pm = phi(&m).map_err(e)?;
        let lhs = phi(&m.mul(&n).map_err(e)?).map_err(e)?;
        ensure(lhs == pm.mul(&phi(&n).map_err(e)?).map_err(e)?, || {
            format!("phi({u} * {v}) differs")
        })?;
        ensure(pm.det().map_err(e)? == Integer::from(1), || {
            format!("det phi({u}) != 1")
        })?;
    }
    for (i, w) in words.iter().take(100).enumerate() {
        let v: Vec<Integer> = (0..3)
            .map(|_| Integer::from(rng.gen_range(-50i64..=50)))
            .collect();
        let m = pair.eval_word(w).map_err(e)?;
        let pv = phi(&m).map_err(e)?.mul_vec(&v).map_err(e)?;
        // conjugation on the trace-zero matrix itself
        let conj = m
            .mul(&from_coords(&v).map_err(e)?)
            .and_then(|x| x.mul(&m.unimodular_inverse()?))
            .map_err(e)?;
        ensure(trace_zero_coords(&conj).map_err(e)? == pv, || {
            format!("phi({w}) is not conjugation on {v:?}")
        })?;
        let q = |x: &[Integer]| -(&x[0] * &x[0] + &x[1] * &x[2]);
        ensure(quadratic_form(&pv) == q(&pv) && q(&pv) == q(&v), || {
            format!("Q changes, sample {i}")
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5), "representation checks")?;
    Ok(format!("500 word pairs, 100 vectors, {elapsed:.2?}"))
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let pair = SchottkyPair::canonical();
    let f = standard_tangent();
    let u = vec![
        Rational::from_integer(0.into()),
        Rational::from_integer(1.into()),
        Rational::from_integer(0.into()),
    ];
    let mut result = Ok(());
    let mut zeros = 0;
    let mut count = 0;
    pair.for_each_word(7, |w, m| {
        if result.is_err() {
            return;
        }
        count += 1;
        let value = f.eval(&phi(m).unwrap().promote::<Rational>().mul_vec(&u).unwrap());
        // g u g^-1 = [[-pr, p^2], [-r^2, pr]] for g = [[p, q], [r, s]], and f = -z/2
        let r = &m[(1, 0)];
        let closed = Rational::new(r * r, Integer::from(2));
        if value.is_zero() {
            zeros += 1;
        }
        result = ensure(value == closed, || {
            format!("f(phi({w})u) = {value}, closed form {closed}")
        })
        .and_then(|_| {
            ensure(value.real_sign() != Sign::Negative, || {
                format!("f(phi({w})u) < 0")
            })
        })
        .and_then(|_| {
            ensure(value.is_zero() == w.is_identity(), || {
                format!("f(phi({w})u) = {value}")
            })
        });
    });
    result?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30), "positivity scan")?;
    Ok(format!(
        "{count} words, f = 0 only at the identity ({zeros}), {elapsed:.2?}"
    ))
}

fn criterion_5() -> Verdict {
    let pair = SchottkyPair::canonical();
    let a = pair.s1();
    let eigen = eigenvector_on_cone(a).map_err(e)?;
    let q = |s: &str| s.parse::<QuadExt>().unwrap();
    let expected = vec![q("2"), q("-2-2*sqrt(3)"), q("-1+sqrt(3)")];
    let lambda = q("7+4*sqrt(3)");
    ensure(eigen.vector == expected, || {
        format!("v_A = {:?}", eigen.vector)
    })?;
    ensure(eigen.eigenvalue == lambda, || {
        format!("lambda = {}", eigen.eigenvalue)
    })?;
    // A X A^-1 = lambda X on the trace-zero matrix X of v_A
    let aq = a.promote::<QuadExt>();
    let x = from_coords(&expected).map_err(e)?;
    let conj = aq
        .mul(&x)
        .and_then(|m| m.mul(&a.unimodular_inverse()?.promote()))
        .map_err(e)?;
    ensure(conj == x.scale(&lambda), || {
        "A v_A A^-1 != lambda v_A".into()
    })?;
    let qv = expected[0]
        .mul_ref(&expected[0])
        .add_ref(&expected[1].mul_ref(&expected[2]));
    ensure(qv.is_zero(), || format!("x^2 + yz = {qv}"))?;
    ensure(quadratic_form(&eigen.vector).is_zero(), || {
        "library Q(v_A) != 0".into()
    })?;

    let witness = phi(&pair
        .eval_word(&orientation_witness(&word("a")))
        .map_err(e)?)
    .map_err(e)?;
    let f = tangent_form_at(&expected, &witness.promote()).map_err(e)?;
    let mut checked = 0;
    for w in enumerate_reduced(2, 6) {
        let in_a = w.letters().iter().all(|&l| l == 1) || w.letters().iter().all(|&l| l == -1);
        let m = phi(&pair.eval_word(&w).map_err(e)?)
            .map_err(e)?
            .promote::<QuadExt>();
        let value = f.eval(&m.mul_vec(&expected).map_err(e)?);
        ensure(value.is_zero() == in_a, || {
            format!("f(phi({w})v_A) = {value}")
        })?;
        ensure(value.real_sign() != Sign::Negative, || {
            format!("f(phi({w})v_A) < 0")
        })?;
        checked += 1;
    }
    Ok(format!(
        "v_A = ({}, {}, {}), lambda = {lambda}, centralizer law on {checked} words",
        expected[0], expected[1], expected[2]
    ))
}

fn tuple_product(gens: &[TupleWord], w: &GenWord) -> TupleWord {
    let mut acc = TupleWord::identity(gens[0].rank(), gens[0].arity()).unwrap();
    for &l in w.letters() {
        let g = &gens[l.unsigned_abs() as usize - 1];
        acc = acc
            .mul(&if l > 0 { g.clone() } else { g.inverse() })
            .unwrap();
    }
    acc
}

fn criterion_6() -> Verdict {
    let pair = SchottkyPair::canonical();
    let mut summary = Vec::new();
    let mut total = 0;
    for name in ["free-f2", "trivial", "z2", "z2-star-z", "s3"] {
        let p = samples::sample(name).map_err(e)?;
        let x = mihailova(&p, 2).map_err(e)?;
        let words: Vec<FreeWord> = enumerate_reduced(p.generators(), 3).collect();
        let queries: Vec<(TupleWord, usize)> = words
            .iter()
            .map(|w| {
                let q = TupleWord::new(vec![w.embed_in_f2(), FreeWord::identity(2)]).unwrap();
                (q, documented_depth(&p, w))
            })
            .collect();
        let answers =
            decide_membership_batch(x.generators(), &queries, &pair, DEFAULT_BUDGET).map_err(e)?;
        let mut members = 0;
        for ((w, (q, depth)), answer) in words.iter().zip(&queries).zip(&answers) {
            let trivial = p.is_identity(w).map_err(e)?;
            total += 1;
            match answer {
                Membership::Trivial => ensure(w.is_identity(), || {
                    format!("{name}: {w} answered trivially")
                })?,
                Membership::Member(cert) => {
                    ensure(trivial, || {
                        format!("{name}: certificate for {w} but oracle says w != 1")
                    })?;
                    let inst = build_ulcp_for(&p, q, &pair).map_err(e)?;
                    let ok = verify_certificate(&inst, Predicate::MapsVIntoH, cert).map_err(e)?;
                    let product = tuple_product(x.generators(), cert.word.as_ref().unwrap());
                    ensure(ok && product == *q, || {
                        format!("{name}: certificate for {w} does not verify")
                    })?;
                    members += 1;
                }
                Membership::NoCertificateAtDepth(cert) => {
                    ensure(!trivial, || {
                        format!("{name}: w = {w} is trivial but search exhausted at {depth}")
                    })?;
                    ensure(cert.depth_searched == *depth, || {
                        format!("{name}: {w} searched to {}", cert.depth_searched)
                    })?;
                }
                Membership::Truncated(_) => return Err(format!("{name}: {w} truncated")),
            }
        }
        summary.push(format!("{name} {members}/{}", words.len() - 1));
    }
    Ok(format!(
        "{total} queries agree; certified members {}",
        summary.join(", ")
    ))
}

fn criterion_7() -> Verdict {
    let pair = SchottkyPair::canonical();
    let z = samples::sample("z2-star-z").map_err(e)?;
    let inst = build_stabilizer(&z, &word("b"), &pair).map_err(e)?;
    let file = instance_to_file(&ProblemInstance::Stabilizer(inst.clone()));
    let integral = file
        .generators
        .iter()
        .flatten()
        .flatten()
        .chain(file.vector.iter().flatten());
    for s in integral {
        ensure(s.parse::<i64>().is_ok(), || {
            format!("entry {s} is not an integer")
        })?;
    }
    let cert = bfs_search(&inst, Predicate::NonidentityFixesV, 2, DEFAULT_BUDGET).map_err(e)?;
    ensure(cert.outcome == Outcome::Found, || {
        format!("z2-star-z: {}", cert.outcome.as_str())
    })?;
    ensure(
        verify_certificate(&inst, Predicate::NonidentityFixesV, &cert).map_err(e)?,
        || "certificate fails".into(),
    )?;
    // conjugation by the certificate's triple fixes (a, b, w)
    let m1 = mihailova(&z, 3).map_err(e)?;
    let cw = cert.word.as_ref().unwrap();
    let t = tuple_product(m1.generators(), cw);
    for (c, target) in t.components().iter().zip(["a", "b", "b"]) {
        let g = pair.eval_word(c).map_err(e)?;
        let x = pair.eval_word(&word(target)).map_err(e)?;
        let conj = g
            .mul(&x)
            .and_then(|m| m.mul(&g.unimodular_inverse()?))
            .map_err(e)?;
        ensure(conj == x, || {
            format!("component {c} does not centralize {target}")
        })?;
    }
    ensure(!t.is_identity(), || "certificate is the identity".into())?;
    let free = samples::sample("free-f2").map_err(e)?;
    for w in ["a", "b", "ab"] {
        let inst = build_stabilizer(&free, &word(w), &pair).map_err(e)?;
        let c = bfs_search(&inst, Predicate::NonidentityFixesV, 6, DEFAULT_BUDGET).map_err(e)?;
        ensure(
            c.outcome == Outcome::Exhausted && c.depth_searched == 6,
            || {
                format!(
                    "free, w = {w}: {} at {}",
                    c.outcome.as_str(),
                    c.depth_searched
                )
            },
        )?;
    }
    Ok(format!(
        "certificate {cw} = {t} at depth {}; free a, b, ab exhausted at 6",
        cert.depth_searched
    ))
}

fn criterion_8() -> Verdict {
    let pair = SchottkyPair::canonical();
    let mut notes = Vec::new();
    for (name, query, depth, torsion) in [
        ("z2-star-z", "(a,b,b)", 5, true),
        ("free-f2", "(a,b,ab)", 5, false),
    ] {
        let p = samples::sample(name).map_err(e)?;
        let inst = build_urcp(&p, &TupleWord::parse(2, query).unwrap(), &pair).map_err(e)?;
        for (i, b) in inst.blocks().iter().enumerate() {
            let value = dot(&b.form, &b.base);
            ensure(value.is_zero(), || {
                format!("{name}: f{}(v{}) = {value}", i + 1, i + 1)
            })?;
        }
        let mut bad = None;
        let stats = explore(&letters(&inst).map_err(e)?, depth, DEFAULT_BUDGET, |v| {
            let values = inst.block_values(v.matrix);
            if values.iter().any(|x| x.real_sign() == Sign::Negative) {
                bad = Some(v.word());
                return Control::Stop;
            }
            Control::Continue
        });
        ensure(bad.is_none(), || {
            format!("{name}: negative block value at {}", bad.clone().unwrap())
        })?;
        let cert = bfs_search(
            &inst,
            Predicate::NonidentityMapsVIntoH,
            depth,
            DEFAULT_BUDGET,
        )
        .map_err(e)?;
        if torsion {
            ensure(cert.outcome == Outcome::Found, || {
                format!("{name}: {}", cert.outcome.as_str())
            })?;
            let ok =
                verify_certificate(&inst, Predicate::NonidentityMapsVIntoH, &cert).map_err(e)?;
            ensure(ok && !cert.matrix.as_ref().unwrap().is_identity(), || {
                format!("{name}: witness fails")
            })?;
            notes.push(format!("{name} witness {}", cert.word.unwrap()));
        } else {
            ensure(
                cert.outcome == Outcome::Exhausted && cert.depth_searched == depth,
                || {
                    format!(
                        "{name}: {} at {}",
                        cert.outcome.as_str(),
                        cert.depth_searched
                    )
                },
            )?;
            notes.push(format!(
                "{name} exhausted at {depth} ({} elements nonnegative)",
                stats.visited
            ));
        }
    }
    Ok(notes.join("; "))
}

fn criterion_9() -> Verdict {
    let pair = SchottkyPair::canonical();
    let mut rng = ChaCha8Rng::seed_from_u64(9);

    let free = samples::sample("free-f2").map_err(e)?;
    let ext = build_ulcp_for(
        &free,
        &TupleWord::parse(2, "(b a b a', b a b a')").unwrap(),
        &pair,
    )
    .map_err(e)?;
    let ec = external_to_corner(&ext).map_err(e)?;
    let v: Vec<Rational> = promote_vec(ext.vector());
    let fv = ext.form_value(&Matrix::identity(6));
    let tv = ec.basis_change().mul_vec(&v).map_err(e)?;
    ensure(
        tv[0] == Rational::from_integer(1.into()) && tv[1..].iter().all(|x| x.is_zero()),
        || "T v != e1".into(),
    )?;
    let orbit = orbit_pairs(&ext, &ec, 4)?;
    for (h, conj) in &orbit {
        let corner = ec.corner_entry(conj);
        // first row of T is f / f(v)
        ensure(&corner * &fv == ext.form_value(h), || {
            format!("external corner {corner}")
        })?;
        ensure(
            holds(&ec, Predicate::CornerZero, conj) == holds(&ext, Predicate::MapsVIntoH, h),
            || "external predicates differ".into(),
        )?;
    }
    for _ in 0..100 {
        let (h, conj) = &orbit[rng.gen_range(0..orbit.len())];
        let explicit = ec
            .basis_change()
            .mul(&h.promote())
            .and_then(|m| m.mul(ec.basis_change_inverse()))
            .map_err(e)?;
        ensure(&explicit == conj, || {
            "external T h T^-1 differs from the conjugated orbit".into()
        })?;
        let hv: Vec<Rational> = promote_vec(&h.mul_vec(ext.vector()).map_err(e)?);
        ensure(
            explicit[(0, 0)] == dot(ext.form(), &hv) / fv.clone(),
            || "external (1,1) != f(hv)/f(v)".into(),
        )?;
    }
    let ext_found = orbit
        .iter()
        .filter(|(h, _)| holds(&ext, Predicate::MapsVIntoH, h))
        .count();
    let ext_len = orbit.len();

    let z = samples::sample("z2-star-z").map_err(e)?;
    let int = build_urcp(&z, &TupleWord::parse(2, "(a,b,ab)").unwrap(), &pair).map_err(e)?;
    let ic = internal_to_corner(&int).map_err(e)?;
    let f: Vec<MultiQuad> = promote_vec(&int.form());
    let v: Vec<MultiQuad> = promote_vec(&int.vector());
    let n = ic.dimension();
    let last = ic.basis_change_inverse().column(n - 1);
    ensure(ic.basis_change().row(0) == &f[..] && last == v, || {
        "internal T does not have row f and column v".into()
    })?;
    let orbit = orbit_pairs(&int, &ic, 4)?;
    for (h, conj) in &orbit {
        let hv = h.promote::<MultiQuad>().mul_vec(&v).map_err(e)?;
        ensure(ic.corner_entry(conj) == dot(&f, &hv), || {
            "internal corner differs from f(hv)".into()
        })?;
        ensure(
            holds(&ic, Predicate::NonidentityCornerZero, conj)
                == holds(&int, Predicate::NonidentityMapsVIntoH, h),
            || "internal predicates differ".into(),
        )?;
    }
    for _ in 0..100 {
        let (h, conj) = &orbit[rng.gen_range(0..orbit.len())];
        let explicit = ic.conjugate(&h.promote());
        ensure(&explicit == conj, || {
            "internal T h T^-1 differs from the conjugated orbit".into()
        })?;
        let hv = h.promote::<MultiQuad>().mul_vec(&v).map_err(e)?;
        ensure(explicit[(0, n - 1)] == dot(&f, &hv), || {
            "internal (1,n) != f(hv)".into()
        })?;
    }
    Ok(format!(
        "external orbit {} ({ext_found} in H), internal orbit {} over {} radicands",
        ext_len,
        orbit.len(),
        v.iter()
            .flat_map(|x| x.radicand_basis().to_vec())
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    ))
}

/// Depth-limited orbits of the hyperplane instance and of its corner form,
/// explored independently and paired by their least words.
type OrbitPair<S> = (Matrix<Integer>, Matrix<S>);

fn orbit_pairs<I, C>(
    inst: &I,
    corner: &C,
    depth: usize,
) -> Result<Vec<OrbitPair<C::Scalar>>, String>
where
    I: SearchInstance<Scalar = Integer>,
    C: SearchInstance,
{
    let mut left = Vec::new();
    explore(&letters(inst).map_err(e)?, depth, DEFAULT_BUDGET, |v| {
        left.push((v.word(), v.matrix.clone()));
        Control::Continue
    });
    let mut right = Vec::new();
    explore(&letters(corner).map_err(e)?, depth, DEFAULT_BUDGET, |v| {
        right.push((v.word(), v.matrix.clone()));
        Control::Continue
    });
    ensure(left.len() == right.len(), || {
        format!("orbit sizes {} vs {}", left.len(), right.len())
    })?;
    left.into_iter()
        .zip(right)
        .map(|((wl, h), (wr, c))| {
            ensure(wl == wr, || format!("orbit order differs at {wl} vs {wr}"))?;
            Ok((h, c))
        })
        .collect()
}

fn criterion_10() -> Verdict {
    let p = samples::sample("standin-5x12").map_err(e)?;
    ensure(p.generators() == 5 && p.relators().len() == 12, || {
        "stand-in is not 5x12".into()
    })?;
    let two = mihailova(&p, 2).map_err(e)?.len();
    let three = mihailova(&p, 3).map_err(e)?.len();
    ensure(two == 17 && three == 17, || {
        format!("{two} and {three} generators")
    })?;
    Ok(format!("{two} generators (arity 2), {three} (arity 3)"))
}

fn criterion_11() -> Verdict {
    let words: Vec<FreeWord> = words_by_hand(6)
        .into_iter()
        .map(|l| FreeWord::new(2, &l).unwrap())
        .collect();
    let mut checked = 0;
    for w in words.iter().filter(|w| !w.is_identity()) {
        // shortest r with r^j = w for some j >= 1, first in enumeration order
        let mut brute = None;
        'search: for r in words
            .iter()
            .filter(|r| !r.is_identity() && r.len() <= w.len())
        {
            let mut p = r.clone();
            for j in 1..=w.len() as u32 {
                if p == *w {
                    brute = Some((r.clone(), j));
                    break 'search;
                }
                p = p.mul(r).unwrap();
            }
        }
        let (root, exp) = brute.expect("w is its own root");
        let lib = w.primitive_root().map_err(e)?;
        ensure(lib == (root.clone(), exp), || {
            format!("{w}: library {lib:?}, brute force ({root}, {exp})")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} words"))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 11] = [
        ("commutator trace", criterion_1),
        ("hyperbolicity scan", criterion_2),
        ("representation", criterion_3),
        ("tangent form positivity", criterion_4),
        ("eigenvector on cone", criterion_5),
        ("Mihailova iff", criterion_6),
        ("stabilizer", criterion_7),
        ("internal hyperplane", criterion_8),
        ("corner conversion", criterion_9),
        ("generator counts", criterion_10),
        ("primitive roots", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match verdict {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
