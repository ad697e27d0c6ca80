//! Rough timing harness: homology of the complement complex at the top
//! bigrading for a named corpus entry. Run with
//! `cargo run --release --example bench -- <name> [max_gens]`.

use std::time::Instant;

use srtor::complex::Complement;
use srtor::{build_complement_complex_auto, Coefficients, ComplexHomology, VertexSet};

fn rss_mb() -> u64 {
    std::fs::read_to_string("/proc/self/status")
        .ok()
        .and_then(|s| {
            s.lines()
                .find(|l| l.starts_with("VmRSS:"))
                .and_then(|l| l.split_whitespace().nth(1))
                .and_then(|kb| kb.parse::<u64>().ok())
        })
        .map(|kb| kb / 1024)
        .unwrap_or(0)
}

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "cycle-8".into());
    let cap: usize = args
        .next()
        .map(|s| s.parse().expect("max_gens must be a number"))
        .unwrap_or(24);

    let doc = srtor::corpus::document(&name)
        .expect("corpus name")
        .expect("valid document");
    let k = doc.complex().unwrap();
    let p = Complement::minimal(&k);
    let m = k.vertex_count();
    let full = VertexSet::full(m);
    println!("{name}: m={m}, |P|={}", p.len());

    let t = Instant::now();
    let complex = build_complement_complex_auto(&p, full, cap).unwrap();
    let total: usize = complex.degrees().map(|n| complex.rank(n)).sum();
    println!("build: {:?}, total rank={total}", t.elapsed());

    for n in complex.degrees().collect::<Vec<_>>() {
        let d = complex.boundary(n);
        let t = Instant::now();
        let red = srtor::linalg::Reduction::compute(&d);
        println!(
            "  d_{n}: {}x{} nnz={} rank={} in {:?}, rss={}MB",
            d.rows(),
            d.cols(),
            d.nnz(),
            red.rank(),
            t.elapsed(),
            rss_mb()
        );
    }

    let t = Instant::now();
    let homology = ComplexHomology::new(&complex).unwrap();
    println!("reductions: {:?}", t.elapsed());

    for coeffs in [
        Coefficients::Integers,
        Coefficients::Rationals,
        Coefficients::PrimeField(2),
    ] {
        let t = Instant::now();
        let groups = homology.nonzero_groups(coeffs);
        println!("{coeffs}: {:?}", t.elapsed());
        for (n, g) in groups {
            println!("  H_{n} = {g}");
        }
    }
}
