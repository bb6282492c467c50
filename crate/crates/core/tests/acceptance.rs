//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with a
//! nonzero status if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use weylcent_core::sample::{random_element, random_noncentral, random_rational_element, rational_pool};
use weylcent_core::{
    centralizer_basis, certify_zero_commutator, decompose_over_center, fraction_witness, parse, theorem_pipeline,
    BigInt, CertifyOptions, CoeffDomain, Degree, MonomialKey, Prime, PrimeField, QWeyl, Rationals, Verdict,
    WeylElement,
};

type Outcome = Result<String, String>;
type Rational = weylcent_core::Rational;
type Check = fn() -> Outcome;

fn field(p: u64) -> PrimeField {
    PrimeField::new(Prime::new(p).unwrap())
}

fn q(text: &str) -> QWeyl {
    parse(text, 1, &Rationals).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn noncentral_centralizers_commute() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x1e44a);
    let mut total = 0;
    for p in [2u64, 3, 5] {
        let f = field(p);
        for _ in 0..50 {
            let a = random_noncentral(&mut rng, &f, 3);
            let cb = centralizer_basis(&a, 6).map_err(|e| format!("p={p}, a={a}: {e}"))?;
            ensure(cb.commutative, || format!("p={p}: centralizer of {a} reported noncommutative"))?;
            // Recheck directly: every basis element commutes with a and with each other.
            for (i, u) in cb.basis.iter().enumerate() {
                ensure(a.commutator(u).unwrap().is_zero(), || format!("p={p}: {u} not in C({a})"))?;
                for v in &cb.basis[i + 1..] {
                    ensure(u.commutator(v).unwrap().is_zero(), || format!("p={p}, a={a}: [{u}, {v}] != 0"))?;
                }
            }
            total += 1;
        }
    }
    Ok(format!("{total}/150 centralizers commutative (D = 6)"))
}

fn centralizer_of_x() -> Outcome {
    let mut sizes = Vec::new();
    for p in [2u64, 3, 5] {
        let d = 2 * p as u32;
        let cb = centralizer_basis(&parse("x", 1, &field(p)).unwrap(), d).map_err(|e| e.to_string())?;
        let got: BTreeSet<MonomialKey> = cb.leading_monomials().into_iter().collect();
        let mut expected = BTreeSet::new();
        for j in 0..=d / p as u32 {
            for i in 0..=d - p as u32 * j {
                expected.insert(MonomialKey::univariate(i, p as u32 * j));
            }
        }
        ensure(got == expected, || format!("p={p}: leading monomials {got:?}, expected {expected:?}"))?;
        sizes.push(format!("p={p}: {}", cb.len()));
        if p == 3 {
            ensure(cb.len() == 12, || format!("p=3: basis size {}, expected 12", cb.len()))?;
        }
    }
    Ok(format!("leading monomials x^i d^(pj), i + pj <= 2p ({})", sizes.join(", ")))
}

fn centralizer_of_x1() -> Outcome {
    let f = field(3);
    let e = |s: &str| parse(s, 2, &f).unwrap();
    let cb = centralizer_basis(&e("x1"), 2).map_err(|e| e.to_string())?;
    ensure(cb.contains(&e("x2")), || "x2 not in centralizer".into())?;
    ensure(cb.contains(&e("d2")), || "d2 not in centralizer".into())?;
    ensure(!cb.commutative, || "reported commutative".into())?;
    let (u, v) = cb.witness.clone().ok_or("no witness pair")?;
    ensure(cb.contains(&u) && cb.contains(&v), || "witness outside the centralizer".into())?;
    let c = u.commutator(&v).unwrap();
    ensure(c == e("1"), || format!("[{u}, {v}] = {c}, expected 1"))?;
    Ok(format!("dim {}, witness [{u}, {v}] = 1", cb.len()))
}

fn decomposition() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xdec0);
    for p in [2u64, 3, 5] {
        let f = field(p);
        for _ in 0..100 {
            let a = random_element(&mut rng, &f, 1, 8, 6);
            let dec = decompose_over_center(&a).map_err(|e| e.to_string())?;
            // Independent reconstruction: sum z_ij * x^i * d^j multiplied out here.
            let mut sum = WeylElement::zero(f, 1);
            for ((i, j), z) in dec.parts() {
                ensure(i < p as u32 && j < p as u32, || format!("p={p}: index ({i},{j}) out of range"))?;
                ensure(z.exponents_divisible_by_characteristic(), || format!("p={p}: part {z} not central"))?;
                ensure(z.commutes_with_generators(), || format!("p={p}: part {z} fails generator test"))?;
                let basis = parse(&format!("x^{i}*d^{j}"), 1, &f).unwrap();
                sum = &sum + &(z * &basis);
            }
            ensure(sum == a, || format!("p={p}: {a} reconstructs to {sum}"))?;
        }
        let zero = decompose_over_center(&WeylElement::zero(f, 1)).map_err(|e| e.to_string())?;
        ensure((0..p as u32).all(|i| (0..p as u32).all(|j| zero.part(i, j).is_zero())), || {
            format!("p={p}: decomposition of 0 has a nonzero part")
        })?;
    }
    Ok("300 round-trips exact, all parts central, decomposition of 0 all-zero".into())
}

fn fraction_field() -> Outcome {
    let f = field(3);
    let e = |s: &str| parse(s, 1, &f).unwrap();
    let w = fraction_witness(&e("d^2"), &e("d"), 3).map_err(|e| e.to_string())?;
    ensure(!w.z2.is_zero(), || "z2 = 0".into())?;
    ensure(&e("d") * &w.z2 == w.z1, || format!("b * z2 = {} != z1 = {}", &e("d") * &w.z2, w.z1))?;
    ensure(w.z2 == e("d^2"), || format!("z2 = {}, expected d^2", w.z2))?;
    Ok(format!("z1 = {}, z2 = {}", w.z1, w.z2))
}

fn polynomial_in(p: &QWeyl, coeffs: &[Rational]) -> QWeyl {
    let mut acc = WeylElement::zero(Rationals, 1);
    for (k, c) in coeffs.iter().enumerate() {
        acc = &acc + &p.pow(k as u32).scale(c);
    }
    acc
}

fn nonconstant(rng: &mut StdRng, max_degree: u32) -> QWeyl {
    loop {
        let e = random_rational_element(rng, 1, max_degree, 4);
        if e.total_degree() > Degree::Finite(0) {
            return e;
        }
    }
}

fn certifier_agreement() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xce47);
    let pool = rational_pool();
    let opts = CertifyOptions { cross_check: false, max_primes: 64 };
    let (mut commuting, mut total) = (0, 0);
    for k in 0..200 {
        let p = nonconstant(&mut rng, if k % 2 == 0 { 4 } else { 2 });
        let q_op = if k % 2 == 0 {
            nonconstant(&mut rng, 4)
        } else {
            let coeffs: Vec<Rational> = (0..3).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
            polynomial_in(&p, &coeffs)
        };
        let direct_zero = (&(&p * &q_op) - &(&q_op * &p)).is_zero();
        let report = certify_zero_commutator(&p, &q_op, &opts).map_err(|e| format!("[{p}, {q_op}]: {e}"))?;
        let expected = if direct_zero { Verdict::Commute } else { Verdict::NotCommute };
        ensure(report.verdict == expected, || {
            format!("[{p}, {q_op}]: verdict {}, direct zero-test {direct_zero}", report.verdict)
        })?;
        commuting += direct_zero as usize;
        total += 1;
    }
    Ok(format!("{total}/200 verdicts match the direct zero-test ({commuting} commuting)"))
}

fn airy_pair() -> (QWeyl, QWeyl) {
    (q("d^2 - x"), q("d^3 - 3/2*x*d - 3/4"))
}

fn airy_certificate() -> Outcome {
    let (p, q_op) = airy_pair();
    let report = certify_zero_commutator(&p, &q_op, &CertifyOptions::default()).map_err(|e| e.to_string())?;
    let cross = report.cross_check.as_ref().map(|c| c.commutator.clone()).unwrap_or_default();
    ensure(report.verdict == Verdict::Commute, || format!("verdict {}, direct [P, Q] = {cross}", report.verdict))?;
    Ok(format!("COMMUTE, prime product {}", report.prime_product))
}

fn first_prime_rejection() -> Outcome {
    let report = certify_zero_commutator(&q("x"), &q("d"), &CertifyOptions::default()).map_err(|e| e.to_string())?;
    ensure(report.verdict == Verdict::NotCommute, || format!("verdict {}", report.verdict))?;
    ensure(report.primes_used.len() == 1, || format!("{} primes checked", report.primes_used.len()))?;
    let first = &report.primes_used[0];
    ensure(first.p.get() == 2 && !first.commutator_zero, || format!("first prime {}", first.p))?;
    Ok("NOT_COMMUTE at p = 2".into())
}

fn pipeline_fidelity() -> Outcome {
    let (p, q_op) = airy_pair();
    let report = theorem_pipeline(&p, &p, &q_op, &CertifyOptions::default()).map_err(|e| e.to_string())?;
    let reason = report.reason.clone().unwrap_or_default();
    let filter = report
        .filter
        .as_ref()
        .ok_or_else(|| format!("no prime filter built (verdict {}, {reason})", report.verdict))?;
    ensure(filter.u == BigInt::from(2), || format!("u = {}", filter.u))?;
    ensure(!report.trace.is_empty(), || format!("empty trace (verdict {}, {reason})", report.verdict))?;
    for t in &report.trace {
        ensure(t.p.get() % 2 == 1, || format!("even prime {} used", t.p))?;
        ensure(t.total_degree == Degree::Finite(2), || format!("p={}: tot(a_p) = {}", t.p, t.total_degree))?;
        ensure(t.degree_prime_to_p && !t.a_central, || format!("p={}: a_p degenerate", t.p))?;
        ensure(t.a_commutes_with_p && t.a_commutes_with_q, || format!("p={}: hypothesis commutator nonzero", t.p))?;
    }
    ensure(report.primes_used.iter().all(|c| c.p.get() % 2 == 1), || "even prime checked".into())?;
    Ok(format!("{} odd primes traced, verdict {}", report.trace.len(), report.verdict))
}

/// Commutative product of total symbols, computed on exponent vectors.
fn symbol_product(a: &QWeyl, b: &QWeyl) -> BTreeMap<(Vec<u32>, Vec<u32>), Rational> {
    let mut out: BTreeMap<(Vec<u32>, Vec<u32>), Rational> = BTreeMap::new();
    let (fa, fb) = (a.leading_form().unwrap(), b.leading_form().unwrap());
    for (ka, ca) in fa.terms() {
        for (kb, cb) in fb.terms() {
            let xs = ka.xexp().iter().zip(kb.xexp()).map(|(i, j)| i + j).collect();
            let ds = ka.dexp().iter().zip(kb.dexp()).map(|(i, j)| i + j).collect();
            *out.entry((xs, ds)).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != Rational::default());
    out
}

fn symbol_map(e: &QWeyl) -> BTreeMap<(Vec<u32>, Vec<u32>), Rational> {
    e.terms().map(|(k, c)| ((k.xexp().to_vec(), k.dexp().to_vec()), c.clone())).collect()
}

fn algebra_kernel() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xa16e);
    let mut checks = 0;

    for _ in 0..100 {
        let nvars = rng.gen_range(1..=2);
        let [a, b, c] = [0; 3].map(|_| random_rational_element(&mut rng, nvars, 3, 4));
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity: {a}, {b}, {c}"))?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("left distributivity: {a}, {b}, {c}"))?;
        ensure(&(&a + &b) * &c == &(&a * &c) + &(&b * &c), || format!("right distributivity: {a}, {b}, {c}"))?;
        let one = WeylElement::one(Rationals, nvars);
        ensure(&a * &one == a && &one * &a == a, || format!("unit: {a}"))?;
        ensure((&a + &(-&a)).is_zero(), || format!("additive inverse: {a}"))?;
        checks += 1;
    }

    for p in [2u64, 3, 5, 7] {
        let prime = Prime::new(p).unwrap();
        for _ in 0..50 {
            let nvars = rng.gen_range(1..=2);
            let a = random_element(&mut rng, &Rationals, nvars, 4, 4);
            let b = random_element(&mut rng, &Rationals, nvars, 4, 4);
            let (ap, bp) = (a.reduce_mod(prime).unwrap(), b.reduce_mod(prime).unwrap());
            ensure((&a * &b).reduce_mod(prime).unwrap() == &ap * &bp, || format!("mod {p} product: {a}, {b}"))?;
            ensure((&a + &b).reduce_mod(prime).unwrap() == &ap + &bp, || format!("mod {p} sum: {a}, {b}"))?;
            checks += 1;
        }
    }

    for _ in 0..200 {
        let nvars = rng.gen_range(1..=2);
        let a = random_rational_element(&mut rng, nvars, 4, 5);
        let b = random_rational_element(&mut rng, nvars, 4, 5);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let prod = &a * &b;
        ensure(symbol_map(&prod.leading_form().unwrap()) == symbol_product(&a, &b), || format!("symbol of {a} * {b}"))?;
        let bound = a.total_degree().finite().unwrap() + b.total_degree().finite().unwrap();
        let c = a.commutator(&b).unwrap();
        if let Degree::Finite(dc) = c.total_degree() {
            ensure(dc + 2 <= bound, || format!("degree drop: [{a}, {b}] = {c}"))?;
        }
        checks += 1;
    }

    let mut round_trips = 0;
    for k in 0..500 {
        let nvars = 1 + k % 2;
        let ok = if k % 3 == 0 {
            let f = field([2, 3, 5, 7][k % 4]);
            let e = random_element(&mut rng, &f, nvars, 5, 6);
            round_trip(&e, &f)
        } else {
            let e = random_rational_element(&mut rng, nvars, 5, 6);
            round_trip(&e, &Rationals)
        };
        ensure(ok, || format!("round-trip failed on sample {k}"))?;
        round_trips += 1;
    }
    Ok(format!("{checks} algebraic checks, {round_trips} parse/print round-trips"))
}

fn round_trip<D: CoeffDomain>(e: &WeylElement<D>, domain: &D) -> bool {
    let text = e.to_string();
    match parse(&text, e.nvars(), domain) {
        Ok(back) => back == *e && back.to_string() == text,
        Err(_) => false,
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        ("1  centralizers of noncentral a in A_1(F_p) are commutative", noncentral_centralizers_commute),
        ("2  centralizer of x is k[x, d^p]", centralizer_of_x),
        ("3  centralizer of x1 in A_2(F_3) is noncommutative", centralizer_of_x1),
        ("4  free of rank p^2 over the center", decomposition),
        ("5  fraction-field witness for d^2, d over F_3", fraction_field),
        ("6a certifier agrees with the direct zero-test", certifier_agreement),
        ("6b Airy pair certifies COMMUTE", airy_certificate),
        ("6c (x, d) rejected at the first prime", first_prime_rejection),
        ("7  pipeline on the Airy pair with a = d^2 - x", pipeline_fidelity),
        ("8  algebra kernel properties", algebra_kernel),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS [{name}] {detail} ({ms} ms)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{name}] {detail} ({ms} ms)");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
