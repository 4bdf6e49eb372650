//! Acceptance suite. Each test is one exit criterion and prints a single
//! `[PASS]` line with its runtime; a failing criterion panics with the reason.
//! All checks use exact arithmetic, so there are no tolerances.

use std::io::Cursor;
use std::time::{Duration, Instant};

use cayley_nut::cli;
use cayley_nut_core::linalg::{adjacency_matrix, kernel_basis, nullity};
use cayley_nut_core::nut::certify_circulant;
use cayley_nut_core::{
    circulant_exists, circulant_graph, circulant_nullity, construct_cayley_nut, decode_graph6,
    encode_graph6, enumerate_connection_sets, is_full_vector, is_nut, prism_complement,
    prism_kernel_vector, qd16_nut_graph, regular_nut_necessary, search_circulant_nut, Graph,
    NutCertificate, RationalVector, SearchWindow,
};
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};

fn report(id: &str, what: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    assert!(elapsed < limit, "{id}: took {elapsed:?}, limit {limit:?}");
    println!("[PASS] {id} {what} ({elapsed:.2?} < {limit:?})");
}

/// Independent re-verification from the graph6 string alone.
fn reverify(cert: &NutCertificate, n: usize, d: usize) {
    let g = decode_graph6(cert.graph6()).expect("certificate graph6 decodes");
    assert_eq!(g.order(), n);
    assert_eq!(g.regular_degree(), Some(d));
    let basis = kernel_basis(&adjacency_matrix(&g));
    assert_eq!(basis.nullity(), 1, "nullity of n={n} d={d}");
    assert!(is_full_vector(&basis.vectors()[0]));
    assert_eq!(&basis.vectors()[0], cert.kernel());
    cert.verify().expect("certificate self-check");
}

#[test]
fn ac1_lemma_instance_d8() {
    let t = Instant::now();
    let g = prism_complement(8).unwrap();
    assert_eq!(g.order(), 12);
    assert_eq!(g.regular_degree(), Some(8));
    let basis = kernel_basis(&adjacency_matrix(&g));
    assert_eq!(basis.nullity(), 1);
    let expected = RationalVector::from_integers([1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1]);
    assert_eq!(basis.vectors()[0], expected);
    report(
        "AC1",
        "prism complement d=8: 8-regular, n=12, nullity 1, closed-form kernel",
        t,
        Duration::from_secs(1),
    );
}

#[test]
fn ac2_lemma_family() {
    let t = Instant::now();
    for d in [8, 16, 24] {
        let g = prism_complement(d).unwrap();
        let cert = is_nut(&g)
            .into_certificate()
            .unwrap_or_else(|| panic!("d={d} not nut"));
        reverify(&cert, d + 4, d);
        assert_eq!(cert.kernel(), &prism_kernel_vector(d).unwrap(), "d={d}");
    }
    report(
        "AC2",
        "prism complement d in {8,16,24} nut with closed-form kernel",
        t,
        Duration::from_secs(10),
    );
}

#[test]
fn ac3_qd16_instance() {
    let t = Instant::now();
    let g = qd16_nut_graph();
    assert_eq!(g.order(), 16);
    assert_eq!(g.regular_degree(), Some(8));
    let basis = kernel_basis(&adjacency_matrix(&g));
    assert_eq!(basis.nullity(), 1);
    assert!(is_full_vector(&basis.vectors()[0]));
    report(
        "AC3",
        "QD16 Cayley graph: 8-regular, n=16, nullity 1, full kernel",
        t,
        Duration::from_secs(1),
    );
}

#[test]
fn ac4_circulant_nonexistence() {
    let t = Instant::now();
    for n in [16, 12] {
        let mut checked = 0;
        for cs in enumerate_connection_sets(n, 8) {
            checked += 1;
            assert_ne!(circulant_nullity(&cs), 1, "n={n} {cs} is a nut circulant");
        }
        assert!(checked > 0);
        assert_eq!(search_circulant_nut(n, 8), None);
    }
    report(
        "AC4",
        "no degree-8 nut circulant on 16 or 12 vertices",
        t,
        Duration::from_secs(30),
    );
}

#[test]
fn ac5_circulant_existence_window() {
    let t = Instant::now();
    let mut pairs = 0;
    for n in (2usize..=24).step_by(2) {
        for d in (4..=n.saturating_sub(2)).step_by(4) {
            let found = search_circulant_nut(n, d);
            assert_eq!(found.is_some(), circulant_exists(n, d), "n={n} d={d}");
            if let Some(cs) = found {
                reverify(&certify_circulant(&cs).unwrap(), n, d);
            }
            pairs += 1;
        }
    }
    assert!(pairs > 0);
    report(
        "AC5",
        "circulant search agrees with existence predicate for even n <= 24",
        t,
        Duration::from_secs(300),
    );
}

fn main_window() -> Vec<(usize, usize)> {
    [4, 8, 12, 16, 20]
        .into_iter()
        .flat_map(|d| (d + 4..=d + 16).step_by(2).map(move |n| (n, d)))
        .collect()
}

#[test]
fn ac6_cayley_existence_window() {
    let t = Instant::now();
    for (n, d) in main_window() {
        let r = construct_cayley_nut(n, d, SearchWindow::default())
            .unwrap_or_else(|e| panic!("n={n} d={d}: {e}"));
        assert_eq!((r.order, r.degree), (n, d));
        reverify(&r.certificate, n, d);
    }
    report(
        "AC6",
        "Cayley nut graph certified for every (n, d) in the window",
        t,
        Duration::from_secs(600),
    );
}

#[test]
fn ac7_circulant_oracle_equivalence() {
    let t = Instant::now();
    let mut compared = 0usize;
    for n in 2..=20 {
        for d in 1..n {
            for cs in enumerate_connection_sets(n, d) {
                let by_poly = circulant_nullity(&cs);
                let by_matrix = nullity(&adjacency_matrix(&circulant_graph(&cs)));
                assert_eq!(by_poly, by_matrix, "n={n} {cs}");
                compared += 1;
            }
        }
    }
    assert!(compared > 1000);
    println!("       {compared} connection sets compared");
    report(
        "AC7",
        "polynomial nullity equals matrix nullity for all n <= 20",
        t,
        Duration::from_secs(300),
    );
}

#[test]
fn ac8_necessary_conditions_on_all_certificates() {
    let t = Instant::now();
    let mut certs: Vec<NutCertificate> = Vec::new();
    for d in [8, 16, 24] {
        certs.push(
            is_nut(&prism_complement(d).unwrap())
                .into_certificate()
                .unwrap(),
        );
    }
    certs.push(is_nut(&qd16_nut_graph()).into_certificate().unwrap());
    for n in (2usize..=24).step_by(2) {
        for d in (4..=n.saturating_sub(2)).step_by(4) {
            if let Some(cs) = search_circulant_nut(n, d) {
                certs.push(certify_circulant(&cs).unwrap());
            }
        }
    }
    for (n, d) in main_window() {
        certs.push(
            construct_cayley_nut(n, d, SearchWindow::default())
                .unwrap()
                .certificate,
        );
    }
    for cert in &certs {
        let d = cert.degree().expect("regular");
        assert!(
            regular_nut_necessary(cert.order(), d),
            "n={} d={d}",
            cert.order()
        );
        assert_eq!(
            cert.kernel().sum(),
            BigRational::zero(),
            "kernel sum for n={} d={d}",
            cert.order()
        );
    }
    println!("       {} certificates checked", certs.len());
    report(
        "AC8",
        "necessary conditions and zero kernel sum on every certificate",
        t,
        Duration::from_secs(600),
    );
}

fn random_graph(rng: &mut impl Rng) -> Graph {
    let n = rng.gen_range(0..=20);
    let p: f64 = rng.gen();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

fn scan_json(threads: usize) -> Vec<u8> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = [
        "cayley-nut",
        "scan",
        "--degree",
        "8",
        "--max-order",
        "24",
        "--json",
        "--threads",
    ];
    let code = cli::run(
        args.iter()
            .map(|s| s.to_string())
            .chain([threads.to_string()]),
        &mut Cursor::new(Vec::new()),
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    out
}

#[test]
fn ac9_round_trip_and_determinism() {
    let t = Instant::now();
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x6e75_7467);
    for _ in 0..1000 {
        let g = random_graph(&mut rng);
        assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }
    let one = scan_json(1);
    let many = scan_json(4);
    assert!(!one.is_empty());
    assert_eq!(one, many, "scan JSON differs between thread counts");
    let parsed: serde_json::Value = serde_json::from_slice(&one).unwrap();
    let feasible: Vec<u64> = parsed["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["feasible"] == true)
        .map(|r| r["order"].as_u64().unwrap())
        .collect();
    assert_eq!(feasible, [12, 14, 16, 18, 20, 22, 24]);
    report(
        "AC9",
        "graph6 round-trip on 1000 random graphs; scan JSON byte-identical across thread counts",
        t,
        Duration::from_secs(120),
    );
}
