//! Nut-graph certification, circulant nullity via polynomial gcd, exhaustive
//! circulant search and the order/degree feasibility predicates.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{circulant_graph, ConnectionSet, Graph};
use crate::graph6::{decode_graph6, encode_graph6};
use crate::linalg::{adjacency_matrix, is_full_vector, kernel_basis, matvec, RationalVector};
use crate::poly::{gcd, IntPoly};

/// Proof that a graph is nut: its canonical encoding together with the unique
/// canonical kernel vector, which is full.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NutCertificate {
    graph6: String,
    kernel: RationalVector,
    nullity: usize,
    order: usize,
    degree: Option<usize>,
    provenance: Option<String>,
}

impl NutCertificate {
    pub fn graph6(&self) -> &str {
        &self.graph6
    }

    pub fn kernel(&self) -> &RationalVector {
        &self.kernel
    }

    /// Kernel entries as integers; canonical kernels are always integral.
    pub fn kernel_integers(&self) -> Vec<BigInt> {
        self.kernel
            .to_integers()
            .expect("canonical kernel is integral")
    }

    pub fn nullity(&self) -> usize {
        self.nullity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `None` when the certified graph is not regular.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    /// Re-derives everything from the graph6 string alone: decodes the graph,
    /// recomputes the kernel, and checks nullity one, fullness, `A·u = 0`,
    /// order and degree against the stored values.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Certification(msg));
        let g = decode_graph6(&self.graph6)?;
        if g.order() != self.order {
            return fail(format!("order {} != recorded {}", g.order(), self.order));
        }
        if g.regular_degree() != self.degree {
            return fail(format!(
                "degree {:?} != recorded {:?}",
                g.regular_degree(),
                self.degree
            ));
        }
        if self.nullity != 1 {
            return fail(format!("recorded nullity {}", self.nullity));
        }
        let a = adjacency_matrix(&g);
        if !matvec(&a, &self.kernel)?.is_zero() {
            return fail(String::from("A·u is not zero"));
        }
        if !is_full_vector(&self.kernel) {
            return fail(String::from("kernel vector has a zero entry"));
        }
        let basis = kernel_basis(&a);
        if basis.nullity() != 1 {
            return fail(format!("recomputed nullity {}", basis.nullity()));
        }
        if basis.vectors()[0] != self.kernel {
            return fail(String::from(
                "kernel differs from recomputed canonical kernel",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotNutReason {
    NullityZero,
    NullityExceedsOne(usize),
    /// Nullity is one but the kernel vector has a zero entry.
    KernelHasZeroEntry,
    /// Fewer than two vertices.
    TrivialGraph,
}

impl NotNutReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            NotNutReason::NullityZero => "nullity_zero",
            NotNutReason::NullityExceedsOne(_) => "nullity_exceeds_one",
            NotNutReason::KernelHasZeroEntry => "kernel_has_zero_entry",
            NotNutReason::TrivialGraph => "trivial_graph",
        }
    }
}

impl fmt::Display for NotNutReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NutVerdict {
    Nut(NutCertificate),
    NotNut(NotNutReason),
}

impl NutVerdict {
    pub fn is_nut(&self) -> bool {
        matches!(self, NutVerdict::Nut(_))
    }

    pub fn certificate(&self) -> Option<&NutCertificate> {
        match self {
            NutVerdict::Nut(c) => Some(c),
            NutVerdict::NotNut(_) => None,
        }
    }

    pub fn into_certificate(self) -> Option<NutCertificate> {
        match self {
            NutVerdict::Nut(c) => Some(c),
            NutVerdict::NotNut(_) => None,
        }
    }
}

/// Classifies `g` by computing its exact adjacency nullspace. Fullness is
/// always checked on the vector itself.
pub fn is_nut(g: &Graph) -> NutVerdict {
    if g.order() <= 1 {
        return NutVerdict::NotNut(NotNutReason::TrivialGraph);
    }
    let basis = kernel_basis(&adjacency_matrix(g));
    match basis.nullity() {
        0 => NutVerdict::NotNut(NotNutReason::NullityZero),
        1 => {
            let kernel = basis.into_vectors().pop().expect("one vector");
            if !is_full_vector(&kernel) {
                return NutVerdict::NotNut(NotNutReason::KernelHasZeroEntry);
            }
            NutVerdict::Nut(NutCertificate {
                graph6: encode_graph6(g),
                kernel,
                nullity: 1,
                order: g.order(),
                degree: g.regular_degree(),
                provenance: g.provenance().map(String::from),
            })
        }
        k => NutVerdict::NotNut(NotNutReason::NullityExceedsOne(k)),
    }
}

/// The symbol `f(x) = Σ_{s < n/2} (x^s + x^{n−s}) + [n/2 ∈ S]·x^{n/2}`, whose
/// values at the `n`-th roots of unity are the circulant's eigenvalues.
pub fn circulant_symbol(cs: &ConnectionSet) -> IntPoly {
    let n = cs.order();
    let mut coeffs = alloc::vec![BigInt::zero(); n];
    for &s in cs.steps() {
        coeffs[s] += BigInt::one();
        if 2 * s != n {
            coeffs[n - s] += BigInt::one();
        }
    }
    IntPoly::new(coeffs)
}

/// Nullity of the circulant adjacency matrix, as `deg gcd(f(x), x^n − 1)`.
/// `x^n − 1` is squarefree, so each vanishing eigenvalue contributes one.
pub fn circulant_nullity(cs: &ConnectionSet) -> usize {
    let g = gcd(&circulant_symbol(cs), &IntPoly::x_pow_minus_one(cs.order()));
    g.degree().expect("x^n - 1 is nonzero")
}

/// True iff the circulant has nullity one. Connection sets of degree zero
/// are never nut.
pub fn circulant_is_nut(cs: &ConnectionSet) -> bool {
    cs.degree() >= 1 && circulant_nullity(cs) == 1
}

/// All connection sets on `n` vertices of degree exactly `d`, in
/// lexicographic order of their sorted step lists.
///
/// Even `d` uses `d/2` steps below `n/2`; odd `d` additionally needs the half
/// step `n/2`, which exists only for even `n`.
pub fn enumerate_connection_sets(n: usize, d: usize) -> impl Iterator<Item = ConnectionSet> {
    let valid = n >= 2 && d >= 1 && d < n && (d.is_multiple_of(2) || n.is_multiple_of(2));
    let half = (d % 2 == 1).then_some(n / 2);
    let full_steps = if valid { (n - 1) / 2 } else { 0 };
    let k = d / 2;
    let combos = if valid && k <= full_steps {
        Some((1..=full_steps).combinations(k))
    } else {
        None
    };
    combos.into_iter().flatten().map(move |mut steps| {
        steps.extend(half);
        ConnectionSet::new(n, steps).expect("steps within range")
    })
}

/// Every nut circulant of order `n` and degree `d`, in enumeration order.
pub fn circulant_nut_witnesses(n: usize, d: usize) -> impl Iterator<Item = ConnectionSet> {
    enumerate_connection_sets(n, d).filter(circulant_is_nut)
}

/// The lexicographically least nut connection set, if any.
pub fn search_circulant_nut(n: usize, d: usize) -> Option<ConnectionSet> {
    circulant_nut_witnesses(n, d).next()
}

/// Necessary conditions on `(n, d)` for a vertex-transitive nut graph:
/// `4 | d, 2 | n, n ≥ d + 4` or `d ≡ 2 (mod 4), 4 | n, n ≥ d + 6`.
/// Returns false for `d = 0`.
pub fn regular_nut_necessary(n: usize, d: usize) -> bool {
    d > 0
        && ((d.is_multiple_of(4) && n.is_multiple_of(2) && n >= d + 4)
            || (d % 4 == 2 && n.is_multiple_of(4) && n >= d + 6))
}

/// Exact characterization of the `(n, d)` admitting a `d`-regular circulant
/// nut graph of order `n`.
pub fn circulant_exists(n: usize, d: usize) -> bool {
    let bound_ok = if d % 8 == 4 { n >= d + 4 } else { n >= d + 6 };
    d > 0 && d.is_multiple_of(4) && n.is_multiple_of(2) && bound_ok && (n, d) != (16, 8)
}

/// The nut circulant on a witness connection set, with its certificate.
pub fn certify_circulant(cs: &ConnectionSet) -> Result<NutCertificate> {
    let g = circulant_graph(cs);
    is_nut(&g).into_certificate().ok_or_else(|| {
        Error::Certification(format!(
            "circulant {cs} on {} vertices is not nut",
            cs.order()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, complement, cycle_graph, k2};
    use crate::linalg::nullity;

    fn cs(n: usize, steps: &[usize]) -> ConnectionSet {
        ConnectionSet::new(n, steps.iter().copied()).unwrap()
    }

    #[test]
    fn verdicts() {
        let prism = complement(&cartesian_product(&cycle_graph(6).unwrap(), &k2()));
        let v = is_nut(&prism);
        let cert = v.certificate().expect("nut");
        assert_eq!((cert.order(), cert.degree()), (12, Some(8)));
        cert.verify().unwrap();
        assert_eq!(
            is_nut(&cycle_graph(4).unwrap()),
            NutVerdict::NotNut(NotNutReason::NullityExceedsOne(2))
        );
        assert_eq!(
            is_nut(&cycle_graph(5).unwrap()),
            NutVerdict::NotNut(NotNutReason::NullityZero)
        );
        assert_eq!(
            is_nut(&Graph::empty(1)),
            NutVerdict::NotNut(NotNutReason::TrivialGraph)
        );
        assert_eq!(
            is_nut(&Graph::empty(0)),
            NutVerdict::NotNut(NotNutReason::TrivialGraph)
        );
        // Path on 3 vertices: kernel (1, 0, -1).
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            is_nut(&p3),
            NutVerdict::NotNut(NotNutReason::KernelHasZeroEntry)
        );
    }

    #[test]
    fn tampered_certificate_fails() {
        let prism = complement(&cartesian_product(&cycle_graph(6).unwrap(), &k2()));
        let cert = is_nut(&prism).into_certificate().unwrap();
        let mut bad = cert.clone();
        bad.kernel = RationalVector::from_integers([1i64; 12]);
        assert!(bad.verify().is_err());
        let mut bad = cert.clone();
        bad.order = 13;
        assert!(bad.verify().is_err());
        let mut bad = cert;
        bad.graph6 = encode_graph6(&cycle_graph(12).unwrap());
        assert!(bad.verify().is_err());
    }

    #[test]
    fn circulant_nullity_examples() {
        assert_eq!(circulant_nullity(&cs(8, &[1, 2])), 1);
        assert_eq!(circulant_nullity(&cs(4, &[1])), 2);
        // K_6: eigenvalues 5 and -1, nonsingular.
        assert_eq!(circulant_nullity(&cs(6, &[1, 2, 3])), 0);
        assert_eq!(
            nullity(&adjacency_matrix(&circulant_graph(&cs(6, &[1, 2, 3])))),
            0
        );
        assert_eq!(circulant_nullity(&cs(1, &[])), 1);
        assert_eq!(circulant_nullity(&cs(5, &[])), 5);
    }

    #[test]
    fn circulant_is_nut_examples() {
        assert!(circulant_is_nut(&cs(8, &[1, 2])));
        assert!(!circulant_is_nut(&cs(4, &[1])));
        assert!(!circulant_is_nut(&cs(1, &[])));
    }

    #[test]
    fn enumeration_examples() {
        let sets: Vec<_> = enumerate_connection_sets(8, 4).collect();
        assert_eq!(sets, [cs(8, &[1, 2]), cs(8, &[1, 3]), cs(8, &[2, 3])]);
        let sets: Vec<_> = enumerate_connection_sets(6, 5).collect();
        assert_eq!(sets, [cs(6, &[1, 2, 3])]);
        assert_eq!(enumerate_connection_sets(5, 3).count(), 0);
        assert_eq!(enumerate_connection_sets(5, 0).count(), 0);
        assert_eq!(enumerate_connection_sets(5, 5).count(), 0);
        let odd: Vec<_> = enumerate_connection_sets(8, 3).collect();
        assert_eq!(odd, [cs(8, &[1, 4]), cs(8, &[2, 4]), cs(8, &[3, 4])]);
        for set in enumerate_connection_sets(12, 7) {
            assert_eq!(set.degree(), 7);
        }
    }

    #[test]
    fn search_examples() {
        assert_eq!(search_circulant_nut(8, 4), Some(cs(8, &[1, 2])));
        assert_eq!(search_circulant_nut(16, 8), None);
        assert_eq!(search_circulant_nut(12, 8), None);
    }

    #[test]
    fn predicates() {
        assert!(regular_nut_necessary(12, 8));
        assert!(!regular_nut_necessary(11, 4));
        assert!(regular_nut_necessary(16, 6));
        assert!(!regular_nut_necessary(14, 6));
        assert!(!regular_nut_necessary(8, 0));
        assert!(!regular_nut_necessary(20, 5));
        assert!(circulant_exists(8, 4));
        assert!(!circulant_exists(12, 8));
        assert!(!circulant_exists(16, 8));
        assert!(circulant_exists(14, 8));
        assert!(!circulant_exists(10, 0));
        assert!(!circulant_exists(13, 4));
    }

    #[test]
    fn symbol_coefficients() {
        let f = circulant_symbol(&cs(8, &[1, 4]));
        assert_eq!(f, IntPoly::from_i64(&[0, 1, 0, 0, 1, 0, 0, 1]));
        // f(1) is the degree.
        assert_eq!(
            circulant_symbol(&cs(9, &[1, 3])).eval(&BigInt::one()),
            BigInt::from(4)
        );
    }
}
