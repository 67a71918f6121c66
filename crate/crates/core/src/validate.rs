//! Named invariant suites, each a bounded exhaustive or seeded random
//! check of one module's laws. A suite stops at its first failure and
//! reports the failing datum.

use crate::arith::{Integer, Matrix, MultiQuad, QuadExt, Rational, Ring, Sign};
use crate::cone::{
    base_vector, cone_membership, eigenvector_on_cone, from_coords, phi, quadratic_form,
    standard_tangent, tangent_form_at, trace_zero_coords,
};
use crate::free::{enumerate_reduced, FreeWord, TupleWord};
use crate::io::{instance_to_json, parse_instance};
use crate::presentation::{mihailova, samples};
use crate::reductions::{
    build_stabilizer, build_ulcp, build_ulcp_for, build_urcp, decide_membership_batch,
    documented_depth, orientation_witness, Membership, ProblemInstance,
};
use crate::schottky::{hyperbolicity_scan, injectivity_scan, Injectivity, SchottkyPair};
use crate::search::{
    bfs_search, explore, letters, verify_certificate, Control, GenWord, Outcome, Predicate,
    SearchInstance, DEFAULT_BUDGET,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt::Display;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidateError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Overrides the suite's default scan depth.
    pub depth: Option<usize>,
    pub seed: u64,
    pub budget: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            depth: None,
            seed: 0x5eed,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

type Suite = fn(&SuiteOptions, &mut Checker) -> Result<(), Failed>;

const SUITES: &[(&str, Suite)] = &[
    ("arith", arith),
    ("free-groups", free_groups),
    ("presentations", presentations),
    ("schottky", schottky),
    ("adjoint-cone", adjoint_cone),
    ("cone-positivity", cone_positivity),
    ("centralizer-law", centralizer_law),
    ("mihailova-iff", mihailova_iff),
    ("stabilizer", stabilizer),
    ("urcp", urcp),
    ("corner", corner),
    ("search", search),
    ("round-trip", round_trip),
];

const ALIASES: &[(&str, &str)] = &[
    ("theorem6-properties", "cone-positivity"),
    ("certify-free", "schottky"),
];

/// Suite names in run order, without aliases.
pub fn suites() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport, ValidateError> {
    let canonical = ALIASES.iter().find(|a| a.0 == name).map_or(name, |a| a.1);
    let (_, suite) = SUITES
        .iter()
        .find(|s| s.0 == canonical)
        .ok_or_else(|| ValidateError::UnknownSuite(name.to_string()))?;
    let mut checker = Checker { checks: 0 };
    let failure = suite(opts, &mut checker).err().map(|f| f.0);
    Ok(SuiteReport {
        suite: name.to_string(),
        passed: failure.is_none(),
        checks: checker.checks,
        failure,
    })
}

pub fn run_all(opts: &SuiteOptions) -> Vec<SuiteReport> {
    suites()
        .into_iter()
        .map(|s| run_suite(s, opts).expect("listed suite"))
        .collect()
}

struct Failed(String);

impl<E: std::error::Error> From<E> for Failed {
    fn from(e: E) -> Self {
        Failed(e.to_string())
    }
}

struct Checker {
    checks: u64,
}

impl Checker {
    fn check(&mut self, ok: bool, datum: impl FnOnce() -> String) -> Result<(), Failed> {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(Failed(datum()))
        }
    }

    fn equal<T: PartialEq + Display>(
        &mut self,
        got: T,
        want: T,
        what: impl Display,
    ) -> Result<(), Failed> {
        self.check(got == want, || {
            format!("{what}: got {got}, expected {want}")
        })
    }
}

fn rng(opts: &SuiteOptions) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed)
}

/// Uniformly random length, then random reduced letters.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<i32> = Vec::with_capacity(len);
    while letters.len() < len {
        let g = rng.gen_range(1..=rank as i32);
        let l = if rng.gen_bool(0.5) { g } else { -g };
        if letters.last() != Some(&-l) {
            letters.push(l);
        }
    }
    FreeWord::new(rank, &letters).expect("letters in range")
}

/// Random matrix of determinant `±1`, built from elementary row operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> Matrix<Integer> {
    let mut m = Matrix::<Integer>::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let k = Integer::from(rng.gen_range(-3i64..=3));
        for c in 0..n {
            let add = &m[(j, c)] * &k;
            m[(i, c)] += add;
        }
    }
    if rng.gen_bool(0.5) {
        for c in 0..n {
            m[(0, c)] = -m[(0, c)].clone();
        }
    }
    m
}

fn random_quad<R: Rng>(rng: &mut R, d: u64) -> QuadExt {
    let q = |rng: &mut R| {
        Rational::new(
            Integer::from(rng.gen_range(-9i64..=9)),
            Integer::from(rng.gen_range(1i64..=4)),
        )
    };
    QuadExt::new(q(rng), q(rng), d).expect("square-free radicand")
}

fn arith(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let mut rng = rng(opts);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=6);
        let a = random_unimodular(&mut rng, n);
        let inv = a.unimodular_inverse()?;
        let id = Matrix::identity(n);
        c.check(a.mul(&inv)? == id && inv.mul(&a)? == id, || {
            format!("inverse of {a}")
        })?;
        let q = a.promote::<Rational>();
        c.check(q.inverse()?.mul(&q)? == Matrix::identity(n), || {
            format!("rational inverse of {a}")
        })?;
    }
    for _ in 0..500 {
        let d = [2u64, 3, 5, 6, 7, 13][rng.gen_range(0..6)];
        let (x, y) = (random_quad(&mut rng, d), random_quad(&mut rng, d));
        let xy = x.mul_ref(&y);
        c.check(xy.real_sign() == x.real_sign() * y.real_sign(), || {
            format!("sign of ({x})({y})")
        })?;
        c.check((x.real_sign() == Sign::Zero) == x.is_zero(), || {
            format!("zero sign of {x}")
        })?;
        let (mx, my) = (MultiQuad::from(x.clone()), MultiQuad::from(y.clone()));
        c.check(MultiQuad::from(xy) == mx.mul_ref(&my), || {
            format!("promoted product of {x}, {y}")
        })?;
        c.check(MultiQuad::from(x.add_ref(&y)) == mx.add_ref(&my), || {
            format!("promoted sum of {x}, {y}")
        })?;
        let r = x.a().clone();
        c.check(
            QuadExt::from(r.clone()).mul_ref(&y) == y.mul_ref(&QuadExt::from(r)),
            || format!("rational {x}"),
        )?;
    }
    Ok(())
}

fn naive_cancel<R: Rng>(rng: &mut R, letters: &[i32]) -> Vec<i32> {
    let mut w = letters.to_vec();
    loop {
        let pairs: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&i| w[i] == -w[i + 1])
            .collect();
        if pairs.is_empty() {
            return w;
        }
        let i = pairs[rng.gen_range(0..pairs.len())];
        w.drain(i..i + 2);
    }
}

fn free_groups(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let mut rng = rng(opts);
    for _ in 0..500 {
        let len = rng.gen_range(0..=12);
        let raw: Vec<i32> = (0..len)
            .map(|_| rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 })
            .collect();
        let w = FreeWord::new(3, &raw)?;
        c.check(w.letters() == naive_cancel(&mut rng, &raw), || {
            format!("confluence on {raw:?}")
        })?;
        let (u, v) = (random_word(&mut rng, 3, 8), random_word(&mut rng, 3, 8));
        let uv = u.mul(&v)?;
        let cancels =
            matches!((u.letters().last(), v.letters().first()), (Some(&x), Some(&y)) if x == -y);
        c.check(
            uv.len() <= u.len() + v.len() && (uv.len() == u.len() + v.len()) != cancels,
            || format!("length of ({u})({v})"),
        )?;
    }
    let depth = opts.depth.unwrap_or(6);
    let words: Vec<FreeWord> = enumerate_reduced(2, depth).collect();
    for w in words.iter().filter(|w| !w.is_identity()) {
        let (root, e) = w.primitive_root()?;
        c.check(root.pow(i64::from(e)) == *w, || format!("root of {w}"))?;
        let shorter = words
            .iter()
            .filter(|r| !r.is_identity() && r.len() < root.len())
            .find(|r| {
                let mut p = (*r).clone();
                while p.len() < w.len() {
                    p = p.mul(r).expect("same rank");
                }
                p == *w
            });
        c.check(shorter.is_none(), || {
            format!(
                "{w} = {}^j with a shorter root than {root}",
                shorter.unwrap()
            )
        })?;
    }
    let mut images = HashSet::new();
    for w in enumerate_reduced(3, 4) {
        let img = w.embed_in_f2();
        c.check(images.insert(img.clone()), || {
            format!("embedding collides at {w} -> {img}")
        })?;
    }
    let short: Vec<FreeWord> = enumerate_reduced(2, depth.min(5)).collect();
    for u in &short {
        for w in &short {
            let commute = u.mul(w)? == w.mul(u)?;
            c.check(commute == u.commutes_with(w), || {
                format!("centralizer law on {u}, {w}")
            })?;
        }
    }
    Ok(())
}

/// Product of Mihailova generators along a generator word.
fn tuple_product(gens: &[TupleWord], word: &GenWord) -> Result<TupleWord, Failed> {
    let mut acc = TupleWord::identity(gens[0].rank(), gens[0].arity())?;
    for &l in word.letters() {
        let g = &gens[l.unsigned_abs() as usize - 1];
        acc = acc.mul(&if l > 0 { g.clone() } else { g.inverse() })?;
    }
    Ok(acc)
}

fn all_gen_words(count: usize, depth: usize) -> Vec<GenWord> {
    let mut out = vec![GenWord::identity()];
    let mut layer = vec![Vec::<i32>::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &layer {
            for g in 1..=count as i32 {
                for l in [g, -g] {
                    if w.last() != Some(&-l) {
                        let mut w2 = w.clone();
                        w2.push(l);
                        next.push(w2);
                    }
                }
            }
        }
        out.extend(next.iter().cloned().map(GenWord::new));
        layer = next;
    }
    out
}

fn presentations(_: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    for name in samples::names() {
        let p = samples::sample(name)?;
        for arity in [2, 3] {
            let m = mihailova(&p, arity)?;
            c.equal(
                m.len(),
                p.generators() + p.relators().len(),
                format!("{name} arity {arity} size"),
            )?;
        }
    }
    c.equal(
        mihailova(&samples::sample("standin-5x12")?, 2)?.len(),
        17,
        "stand-in generator count",
    )?;
    for p in samples::decidable() {
        // the same generators over F_k, before embedding
        let k = p.generators();
        let mut raw: Vec<TupleWord> = (1..=k)
            .map(|i| TupleWord::diagonal(&FreeWord::generator(k, i), 3))
            .collect::<Result<_, _>>()?;
        for r in p.relators() {
            raw.push(TupleWord::new(vec![
                FreeWord::identity(k),
                FreeWord::identity(k),
                r.clone(),
            ])?);
        }
        let embedded = mihailova(&p, 3)?;
        for word in all_gen_words(raw.len(), 4) {
            let t = tuple_product(&raw, &word)?;
            let [m, m2, n] = t.components() else {
                unreachable!("arity 3")
            };
            c.check(m == m2, || format!("{}: {word} gives {t}", p.name()))?;
            c.check(p.is_identity(&m.inverse().mul(n)?)?, || {
                format!("{}: {word} gives {t}, m != n", p.name())
            })?;
            let e = tuple_product(embedded.generators(), &word)?;
            let want: Vec<FreeWord> = t.components().iter().map(FreeWord::embed_in_f2).collect();
            c.check(e.components() == want.as_slice(), || {
                format!("{}: embedding of {word}", p.name())
            })?;
        }
    }
    // fiber-product law for the free group: (w, w') in M iff w = w'
    let pair = SchottkyPair::canonical();
    let free = samples::sample("free-f2")?;
    let x = mihailova(&free, 2)?;
    let words: Vec<FreeWord> = enumerate_reduced(2, 3).collect();
    let mut queries = Vec::new();
    for u in &words {
        for w in &words {
            queries.push((TupleWord::new(vec![u.embed_in_f2(), w.embed_in_f2()])?, 3));
        }
    }
    let answers = decide_membership_batch(x.generators(), &queries, &pair, DEFAULT_BUDGET)?;
    for ((q, _), a) in queries.iter().zip(&answers) {
        let equal = q.components()[0] == q.components()[1];
        let ok = match a {
            Membership::Trivial | Membership::Member(_) => equal,
            Membership::NoCertificateAtDepth(_) => !equal,
            Membership::Truncated(_) => false,
        };
        c.check(ok, || format!("fiber product law on {q}: {a:?}"))?;
    }
    Ok(())
}

fn schottky(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let t = pair.commutator_trace();
    c.check(t == Integer::from(-25), || format!("commutator trace {t}"))?;
    let depth = opts.depth.unwrap_or(8);
    let report = hyperbolicity_scan(&pair, depth);
    c.check(report.violations.is_empty(), || {
        format!("not hyperbolic: {}", report.violations.join(", "))
    })?;
    let expected = 2 * (3u64.pow(depth as u32) - 1);
    c.equal(report.words_checked, expected, "nonidentity words scanned")?;
    let inj_depth = depth.min(6);
    match injectivity_scan(&pair, inj_depth) {
        Injectivity::Injective { words } => c.equal(
            words,
            1 + 2 * (3u64.pow(inj_depth as u32) - 1),
            "injectivity words",
        )?,
        Injectivity::Collision(u, v) => {
            c.check(false, || format!("{u} and {v} give equal matrices"))?
        }
    }
    let mut rng = rng(opts);
    for _ in 0..500 {
        let (u, v) = (random_word(&mut rng, 2, 10), random_word(&mut rng, 2, 10));
        let ok = pair.eval_word(&u.mul(&v)?)? == pair.eval_word(&u)?.mul(&pair.eval_word(&v)?)?;
        c.check(ok, || format!("eval is not multiplicative on {u}, {v}"))?;
    }
    Ok(())
}

fn adjoint_cone(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let mut rng = rng(opts);
    for _ in 0..500 {
        let (u, v) = (random_word(&mut rng, 2, 10), random_word(&mut rng, 2, 10));
        let (m, n) = (pair.eval_word(&u)?, pair.eval_word(&v)?);
        let pm = phi(&m)?;
        c.check(phi(&m.mul(&n)?)? == pm.mul(&phi(&n)?)?, || {
            format!("phi not multiplicative on {u}, {v}")
        })?;
        c.check(pm.det()?.is_one(), || format!("det phi({u}) != 1"))?;
    }
    let random_vec = |rng: &mut ChaCha8Rng| -> Vec<Integer> {
        (0..3)
            .map(|_| Integer::from(rng.gen_range(-20i64..=20)))
            .collect()
    };
    for _ in 0..100 {
        let v = random_vec(&mut rng);
        let g = random_word(&mut rng, 2, 10);
        let m = pair.eval_word(&g)?;
        let pv = phi(&m)?.mul_vec(&v)?;
        c.check(quadratic_form(&pv) == quadratic_form(&v), || {
            format!("Q not invariant: {g}, {v:?}")
        })?;
        let x = from_coords(&v)?;
        let conj = m.mul(&x)?.mul(&m.unimodular_inverse()?)?;
        c.check(trace_zero_coords(&conj)? == pv, || {
            format!("intertwining fails: {g}, {v:?}")
        })?;
    }
    for _ in 0..200 {
        let (s, t) = (
            Integer::from(rng.gen_range(-6i64..=6)),
            Integer::from(rng.gen_range(-6i64..=6)),
        );
        let mut v = vec![&s * &t, -(&s * &s), &t * &t];
        if rng.gen_bool(0.5) {
            v.iter_mut().for_each(|x| *x = -x.clone());
        }
        let class = cone_membership(&v)?;
        let g = random_word(&mut rng, 2, 8);
        let moved = phi(&pair.eval_word(&g)?)?.mul_vec(&v)?;
        c.check(cone_membership(&moved)? == class, || {
            format!("{g} moves {v:?} off its cone component")
        })?;
    }
    let eigen = eigenvector_on_cone(pair.s1())?;
    c.check(eigen.eigenvalue.to_string() == "7+4*sqrt(3)", || {
        format!("eigenvalue {}", eigen.eigenvalue)
    })?;
    c.check(quadratic_form(&eigen.vector).is_zero(), || {
        "v_A is off the cone".to_string()
    })?;
    Ok(())
}

fn cone_positivity(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let f = standard_tangent();
    let u: Vec<Rational> = base_vector();
    let mut result = Ok(());
    pair.for_each_word(opts.depth.unwrap_or(7), |w, m| {
        if result.is_err() {
            return;
        }
        let image = phi(m)
            .expect("2x2")
            .promote::<Rational>()
            .mul_vec(&u)
            .expect("3x3");
        let value = f.eval(&image);
        result = c
            .check(value >= Rational::zero(), || {
                format!("f(phi({w})u) = {value} < 0")
            })
            .and_then(|_| {
                c.check(value.is_zero() == w.is_identity(), || {
                    format!("f(phi({w})u) = {value}")
                })
            });
    });
    result
}

fn centralizer_law(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let depth = opts.depth.unwrap_or(6);
    for root in ["a", "b", "ab", "a b'", "a a b"] {
        let w0 = FreeWord::parse(2, root)?;
        for k in [1, 2] {
            let w = w0.pow(k);
            let eigen = eigenvector_on_cone(&pair.eval_word(&w)?)?;
            let witness = phi(&pair.eval_word(&orientation_witness(&w))?)?.promote::<QuadExt>();
            let f = tangent_form_at(&eigen.vector, &witness)?;
            let mut result = Ok(());
            pair.for_each_word(depth, |g, m| {
                if result.is_err() {
                    return;
                }
                let moved = phi(&m.promote::<QuadExt>())
                    .expect("2x2")
                    .mul_vec(&eigen.vector)
                    .expect("3x3");
                let value = f.eval(&moved);
                result = c
                    .check(value.real_sign() != Sign::Negative, || {
                        format!("f(phi({g})v) < 0 for A = {w}")
                    })
                    .and_then(|_| {
                        c.check(value.is_zero() == g.commutes_with(&w0), || {
                            format!("f(phi({g})v) = {value} for A = {w}")
                        })
                    });
            });
            result?;
        }
    }
    Ok(())
}

fn mihailova_iff(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let max_len = opts.depth.unwrap_or(3);
    for p in samples::decidable() {
        let x = mihailova(&p, 2)?;
        let words: Vec<FreeWord> = enumerate_reduced(p.generators(), max_len).collect();
        let queries = words
            .iter()
            .map(|w| {
                Ok((
                    TupleWord::new(vec![w.embed_in_f2(), FreeWord::identity(2)])?,
                    documented_depth(&p, w),
                ))
            })
            .collect::<Result<Vec<_>, Failed>>()?;
        let answers = decide_membership_batch(x.generators(), &queries, &pair, opts.budget)?;
        for ((w, (q, depth)), answer) in words.iter().zip(&queries).zip(&answers) {
            let trivial = p.is_identity(w)?;
            let ok = match answer {
                Membership::Trivial => w.is_identity(),
                Membership::Member(cert) => {
                    let inst = build_ulcp(x.generators(), q, &pair)?;
                    let word = cert.word.as_ref().expect("found");
                    trivial
                        && verify_certificate(&inst, Predicate::MapsVIntoH, cert)?
                        && tuple_product(x.generators(), word)? == *q
                }
                Membership::NoCertificateAtDepth(cert) => !trivial && cert.depth_searched == *depth,
                Membership::Truncated(_) => false,
            };
            c.check(ok, || {
                format!("{}: w = {w}, oracle {trivial}, search {answer:?}", p.name())
            })?;
        }
    }
    Ok(())
}

fn stabilizer(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let depth = opts.depth.unwrap_or(6);
    for p in samples::decidable() {
        for text in ["x1", "x2", "x1 x2"] {
            let w = FreeWord::parse(p.generators(), text)?;
            let torsion = p.has_torsion(&w, 6)?;
            let inst = build_stabilizer(&p, &w.embed_in_f2(), &pair)?;
            let cert = bfs_search(&inst, Predicate::NonidentityFixesV, depth, opts.budget)?;
            let ok = match cert.outcome {
                Outcome::Found => {
                    torsion && verify_certificate(&inst, Predicate::NonidentityFixesV, &cert)?
                }
                Outcome::Exhausted => !torsion,
                Outcome::Truncated => false,
            };
            c.check(ok, || {
                format!(
                    "{}: w = {text}, torsion {torsion}, search {}",
                    p.name(),
                    cert.outcome.as_str()
                )
            })?;
        }
    }
    Ok(())
}

fn urcp(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let depth = opts.depth.unwrap_or(5);
    let cases = [
        ("z2-star-z", "(a,b,b)", true),
        ("free-f2", "(a,b,ab)", false),
        ("z2", "(a,b,ab)", false),
    ];
    for (name, query, expect) in cases {
        let inst = build_urcp(&samples::sample(name)?, &TupleWord::parse(2, query)?, &pair)?;
        let id = Matrix::identity(inst.dimension());
        c.check(inst.block_values(&id).iter().all(Zero::is_zero), || {
            format!("{name} {query}: v is not in H")
        })?;
        let mut negative = None;
        explore(&letters(&inst)?, depth.min(4), opts.budget, |v| {
            if inst
                .block_values(v.matrix)
                .iter()
                .any(|x| x.real_sign() == Sign::Negative)
            {
                negative = Some(v.word());
                return Control::Stop;
            }
            Control::Continue
        });
        c.check(negative.is_none(), || {
            format!(
                "{name} {query}: negative block value at {}",
                negative.clone().unwrap()
            )
        })?;
        let cert = bfs_search(&inst, Predicate::NonidentityMapsVIntoH, depth, opts.budget)?;
        let ok = match cert.outcome {
            Outcome::Found => {
                expect && verify_certificate(&inst, Predicate::NonidentityMapsVIntoH, &cert)?
            }
            Outcome::Exhausted => !expect,
            Outcome::Truncated => false,
        };
        c.check(ok, || format!("{name} {query}: {}", cert.outcome.as_str()))?;
    }
    Ok(())
}

fn corner(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let depth = opts.depth.unwrap_or(4);
    let mut rng = rng(opts);
    let t2 = |s: &str| TupleWord::parse(2, s);
    let free = samples::sample("free-f2")?;
    for query in ["(ab,ab)", "(a,b)"] {
        let inst = build_ulcp_for(&free, &t2(query)?, &pair)?;
        let corner = crate::reductions::external_to_corner(&inst)?;
        let fv = inst.form_value(&Matrix::identity(6));
        let mut orbit = Vec::new();
        explore(&letters(&inst)?, depth, opts.budget, |v| {
            orbit.push(v.matrix.clone());
            Control::Continue
        });
        for h in &orbit {
            let conj = corner.conjugate(&h.promote());
            let entry = corner.corner_entry(&conj);
            c.check(&entry * &fv == inst.form_value(h), || {
                format!("external {query}: corner {entry}")
            })?;
            c.check(
                corner.test(Predicate::CornerZero, &conj) == inst.test(Predicate::MapsVIntoH, h),
                || format!("external {query}: predicates differ"),
            )?;
        }
        for _ in 0..100 {
            let (g, h) = (
                &orbit[rng.gen_range(0..orbit.len())],
                &orbit[rng.gen_range(0..orbit.len())],
            );
            let lhs = corner
                .conjugate(&g.promote())
                .mul(&corner.conjugate(&h.promote()))?;
            c.check(lhs == corner.conjugate(&g.mul(h)?.promote()), || {
                format!("external {query}: not multiplicative")
            })?;
        }
    }
    let z = samples::sample("z2-star-z")?;
    let inst = build_urcp(&z, &t2("(a,b,ab)")?, &pair)?;
    let corner = crate::reductions::internal_to_corner(&inst)?;
    let f: Vec<MultiQuad> = crate::arith::promote_vec(&inst.form());
    let v: Vec<MultiQuad> = crate::arith::promote_vec(&inst.vector());
    let mut orbit = Vec::new();
    explore(&letters(&inst)?, depth.min(2), opts.budget, |visit| {
        orbit.push(visit.matrix.clone());
        Control::Continue
    });
    for h in &orbit {
        let hq = h.promote::<MultiQuad>();
        let conj = corner.conjugate(&hq);
        let value = crate::arith::dot(&f, &hq.mul_vec(&v)?);
        c.check(corner.corner_entry(&conj) == value, || {
            format!("internal: corner entry differs from f(hv) = {value}")
        })?;
        c.check(
            crate::search::holds(&corner, Predicate::NonidentityCornerZero, &conj)
                == crate::search::holds(&inst, Predicate::NonidentityMapsVIntoH, h),
            || "internal: predicates differ".to_string(),
        )?;
    }
    Ok(())
}

fn search(opts: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let z2 = samples::sample("z2")?;
    let t2 = |s: &str| TupleWord::parse(2, s);
    let inst = build_ulcp_for(&z2, &t2("(a,b)")?, &pair)?;
    let cert = bfs_search(&inst, Predicate::MapsVIntoH, 3, opts.budget)?;
    let mut distinct = HashSet::new();
    for word in all_gen_words(inst.generators().len(), 3) {
        distinct.insert(crate::search::evaluate(&inst, &word)?);
    }
    c.equal(cert.outcome.as_str(), "exhausted", "z2 (a,b) outcome")?;
    c.equal(
        cert.elements_visited,
        distinct.len() as u64,
        "distinct elements at depth 3",
    )?;
    let member = build_ulcp_for(&z2, &t2("(b a b a', b a b a')")?, &pair)?;
    let first = bfs_search(&member, Predicate::MapsVIntoH, 3, opts.budget)?;
    c.equal(first.outcome.as_str(), "found", "z2 diagonal outcome")?;
    c.check(
        verify_certificate(&member, Predicate::MapsVIntoH, &first)?,
        || "certificate fails".to_string(),
    )?;
    for d in 3..=5 {
        let again = bfs_search(&member, Predicate::MapsVIntoH, d, opts.budget)?;
        c.check(again == first, || format!("witness changes at depth {d}"))?;
    }
    let tiny = bfs_search(&inst, Predicate::MapsVIntoH, 6, 50)?;
    c.equal(tiny.outcome.as_str(), "truncated", "budget 50 outcome")?;
    Ok(())
}

fn round_trip(_: &SuiteOptions, c: &mut Checker) -> Result<(), Failed> {
    let pair = SchottkyPair::canonical();
    let z = samples::sample("z2-star-z")?;
    let ext = ProblemInstance::External(build_ulcp_for(
        &z,
        &TupleWord::parse(2, "(b b, 1)")?,
        &pair,
    )?);
    let int = ProblemInstance::Internal(build_urcp(&z, &TupleWord::parse(2, "(a,b,ab)")?, &pair)?);
    let stab = ProblemInstance::Stabilizer(build_stabilizer(&z, &FreeWord::parse(2, "b")?, &pair)?);
    let all = [ext.to_corner()?, int.to_corner()?, ext, int, stab];
    for inst in &all {
        let json = instance_to_json(inst);
        let back = parse_instance(&json)?;
        c.check(&back == inst, || {
            format!("{} instance does not round-trip", inst.kind())
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(
            run_suite("nope", &SuiteOptions::default()),
            Err(ValidateError::UnknownSuite("nope".into()))
        );
    }

    #[test]
    fn cheap_suites_pass() {
        let opts = SuiteOptions {
            depth: Some(4),
            ..Default::default()
        };
        for name in ["theorem6-properties", "schottky", "round-trip", "arith"] {
            let r = run_suite(name, &opts).unwrap();
            assert!(r.passed, "{name}: {:?}", r.failure);
            assert!(r.checks > 0);
        }
    }
}
