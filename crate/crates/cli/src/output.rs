use serde::Serialize;
use serde_json::json;
use weylcent_core::{
    CenterDecomposition, CentralizerBasis, CertificateReport, CoeffDomain, FractionWitness, WeylElement,
};

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

fn strings<D: CoeffDomain>(elems: &[WeylElement<D>]) -> Vec<String> {
    elems.iter().map(ToString::to_string).collect()
}

pub fn element<D: CoeffDomain>(json: bool, modulus: Option<u64>, nvars: usize, e: &WeylElement<D>) {
    if json {
        emit_json(&json!({ "p": modulus, "nvars": nvars, "result": e.to_string() }));
    } else {
        println!("{e}");
    }
}

#[derive(Serialize)]
struct CentralizerJson {
    p: u64,
    nvars: usize,
    degree: u32,
    basis: Vec<String>,
    commutative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<[String; 2]>,
}

pub fn centralizer<D: CoeffDomain>(json: bool, cb: &CentralizerBasis<D>) {
    let witness = cb.witness.as_ref().map(|(u, v)| [u.to_string(), v.to_string()]);
    if json {
        emit_json(&CentralizerJson {
            p: cb.characteristic,
            nvars: cb.a.nvars(),
            degree: cb.degree_bound,
            basis: strings(&cb.basis),
            commutative: cb.commutative,
            witness,
        });
        return;
    }
    for b in &cb.basis {
        println!("{b}");
    }
    println!("commutative: {}", cb.commutative);
    if let Some([u, v]) = witness {
        println!("witness: {u}, {v}");
    }
}

pub fn decomposition<D: CoeffDomain>(json: bool, dec: &CenterDecomposition<D>) {
    if json {
        let parts: Vec<_> = dec.parts().map(|((i, j), z)| json!({ "i": i, "j": j, "z": z.to_string() })).collect();
        emit_json(&json!({ "p": dec.characteristic(), "parts": parts }));
        return;
    }
    if dec.is_all_zero() {
        println!("0");
    }
    for ((i, j), z) in dec.parts() {
        println!("({i},{j}): {z}");
    }
}

pub fn fraction_witness<D: CoeffDomain>(json: bool, p: u64, a: &WeylElement<D>, w: &FractionWitness<D>) {
    if json {
        emit_json(&json!({
            "p": p,
            "a": a.to_string(),
            "b": w.b.to_string(),
            "degree": w.degree_bound,
            "z1": w.z1.to_string(),
            "z2": w.z2.to_string(),
        }));
    } else {
        println!("z1 = {}", w.z1);
        println!("z2 = {}", w.z2);
    }
}

pub fn report(json: bool, r: &CertificateReport) {
    if json {
        emit_json(r);
        return;
    }
    println!("verdict: {}", r.verdict);
    if let Some(reason) = &r.reason {
        println!("reason: {reason}");
    }
    if let Some(b) = &r.majorant_bound {
        println!("majorant bound B: {b}");
    }
    println!("prime product: {}", r.prime_product);
    let used: Vec<String> =
        r.primes_used.iter().map(|c| format!("{}{}", c.p, if c.commutator_zero { "" } else { "!" })).collect();
    if used.is_empty() {
        println!("primes: none");
    } else {
        println!("primes: {}", used.join(" "));
    }
    if !r.skipped_primes.is_empty() {
        let skipped: Vec<String> = r.skipped_primes.iter().map(|s| format!("{} ({})", s.p, s.reason)).collect();
        println!("skipped: {}", skipped.join(", "));
    }
    if let Some(f) = &r.filter {
        println!("filter: n = {}, u = {}", f.n, f.u);
    }
    for t in &r.trace {
        println!(
            "p = {}: tot = {}, prime to p: {}, central: {}, [a,P] = 0: {}, [a,Q] = 0: {}, [P,Q] = 0: {}",
            t.p,
            t.total_degree,
            t.degree_prime_to_p,
            t.a_central,
            t.a_commutes_with_p,
            t.a_commutes_with_q,
            t.p_commutes_with_q
        );
    }
    if let Some(c) = &r.cross_check {
        println!("cross-check [P,Q] over Q: {}", c.commutator);
    }
}
