//! Certified `d`-regular Cayley nut graphs for every feasible `(n, d)` with
//! `4 | d`.
//!
//! Three regimes cover the feasible region:
//!
//! * **circulant**: whenever a nut circulant of order `n` and degree `d`
//!   exists, the lexicographically least one is found by exhaustive search;
//! * **prism complement**: for `8 | d` and `n = d + 4`, the complement of
//!   the prism `C_β □ K_2` with `β = (d + 4)/2`;
//! * **qd16**: for `(n, d) = (16, 8)`, a Cayley graph of the quasidihedral
//!   group of order 16.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, FailedCondition, Result};
use crate::graph::{
    cartesian_product, cayley_graph, complement, cycle_graph, k2, ConnectionSet, Graph,
};
use crate::group::{parse_qd16_word, quasidihedral_16, reduce_word, GeneratorSet};
use crate::linalg::RationalVector;
use crate::nut::{
    certify_circulant, circulant_exists, is_nut, search_circulant_nut, NutCertificate,
};

/// Default largest order for which exhaustive circulant search runs.
pub const DEFAULT_SEARCH_WINDOW: usize = 64;

/// Generator words of the 8-regular nut Cayley graph on QD16.
pub const QD16_GENERATOR_WORDS: [&str; 8] =
    ["tst", "tsts^2", "t", "s^2 t", "ts", "sts", "ts^2", "sts^2"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Circulant,
    PrismComplement,
    Qd16,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Circulant => "circulant",
            Regime::PrismComplement => "prism_complement",
            Regime::Qd16 => "qd16",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchWindow {
    Bounded(usize),
    Unbounded,
}

impl Default for SearchWindow {
    fn default() -> Self {
        SearchWindow::Bounded(DEFAULT_SEARCH_WINDOW)
    }
}

impl SearchWindow {
    pub fn check(&self, order: usize) -> Result<()> {
        match *self {
            SearchWindow::Bounded(limit) if order > limit => {
                Err(Error::SearchWindowExceeded { order, limit })
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionParameters {
    Circulant { connection_set: ConnectionSet },
    PrismComplement { beta: usize },
    Qd16 { generator_words: [&'static str; 8] },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub certificate: NutCertificate,
    pub regime: Regime,
    pub order: usize,
    pub degree: usize,
    pub parameters: ConstructionParameters,
}

/// Checks `d > 0`, `4 | d`, `2 | n` and `n ≥ d + 4`, in that order.
pub fn check_cayley_feasible(n: usize, d: usize) -> core::result::Result<(), FailedCondition> {
    if d == 0 {
        Err(FailedCondition::PositiveDegree)
    } else if d % 4 == 2 {
        Err(FailedCondition::DegreeTwoModFourOpen)
    } else if !d.is_multiple_of(4) {
        Err(FailedCondition::DegreeDivisibleByFour)
    } else if !n.is_multiple_of(2) {
        Err(FailedCondition::EvenOrder)
    } else if n < d + 4 {
        Err(FailedCondition::OrderAtLeastDegreePlusFour)
    } else {
        Ok(())
    }
}

/// True iff a `d`-regular Cayley nut graph of order `n` exists, for `4 | d`.
pub fn cayley_feasible(n: usize, d: usize) -> bool {
    check_cayley_feasible(n, d).is_ok()
}

fn infeasible(n: usize, d: usize, condition: FailedCondition) -> Error {
    Error::Infeasible {
        order: n,
        degree: d,
        condition,
    }
}

/// Which regime handles a feasible `(n, d)`.
pub fn select_regime(n: usize, d: usize) -> Result<Regime> {
    check_cayley_feasible(n, d).map_err(|c| infeasible(n, d, c))?;
    if circulant_exists(n, d) {
        Ok(Regime::Circulant)
    } else if (n, d) == (16, 8) {
        Ok(Regime::Qd16)
    } else if d.is_multiple_of(8) && n == d + 4 {
        Ok(Regime::PrismComplement)
    } else {
        Err(Error::Certification(format!(
            "no construction regime covers (n={n}, d={d})"
        )))
    }
}

fn check_prism_degree(d: usize) -> Result<usize> {
    if d < 8 || !d.is_multiple_of(8) {
        return Err(infeasible(d + 4, d, FailedCondition::PrismDegree));
    }
    Ok((d + 4) / 2)
}

/// `complement(C_β □ K_2)` with `β = (d + 4)/2`: `d`-regular on `d + 4`
/// vertices. Vertex `2j` is `a_j = (j, 0)` and `2j + 1` is `b_j = (j, 1)`.
pub fn prism_complement(d: usize) -> Result<Graph> {
    let beta = check_prism_degree(d)?;
    Ok(complement(&cartesian_product(&cycle_graph(beta)?, &k2())))
}

/// The kernel vector of [`prism_complement`] in closed form:
/// `u(a_j) = u(b_j) = (−1)^j`.
pub fn prism_kernel_vector(d: usize) -> Result<RationalVector> {
    let beta = check_prism_degree(d)?;
    Ok(RationalVector::from_integers((0..beta).flat_map(|j| {
        let sign: i64 = if j % 2 == 0 { 1 } else { -1 };
        [sign, sign]
    })))
}

/// The QD16 generator words reduced to element indices.
pub fn qd16_generator_set() -> GeneratorSet {
    let group = quasidihedral_16();
    let elements = QD16_GENERATOR_WORDS
        .iter()
        .map(|w| reduce_word(&parse_qd16_word(w).expect("static word parses")));
    GeneratorSet::new(&group, elements).expect("QD16 words form an inverse-closed set")
}

/// The 8-regular Cayley graph of QD16 on [`QD16_GENERATOR_WORDS`].
pub fn qd16_nut_graph() -> Graph {
    let group = quasidihedral_16();
    cayley_graph(&group, &qd16_generator_set())
        .expect("generator set validated against QD16")
        .with_provenance(format!(
            "cayley(QD16, {{{}}})",
            QD16_GENERATOR_WORDS.join(", ")
        ))
}

fn certify(g: &Graph, what: &str) -> Result<NutCertificate> {
    let cert = is_nut(g)
        .into_certificate()
        .ok_or_else(|| Error::Certification(format!("{what} is not nut")))?;
    cert.verify()?;
    Ok(cert)
}

/// Builds and certifies a `d`-regular Cayley nut graph of order `n`.
///
/// Infeasible inputs return [`Error::Infeasible`] naming the failed
/// condition. The circulant regime honors `window`; the other two regimes
/// have fixed small cases and ignore it.
pub fn construct_cayley_nut(
    n: usize,
    d: usize,
    window: SearchWindow,
) -> Result<ConstructionResult> {
    let regime = select_regime(n, d)?;
    let (certificate, parameters) = match regime {
        Regime::Circulant => {
            window.check(n)?;
            let connection_set = search_circulant_nut(n, d).ok_or_else(|| {
                Error::Certification(format!("no nut circulant found for (n={n}, d={d})"))
            })?;
            let cert = certify_circulant(&connection_set)?;
            cert.verify()?;
            (cert, ConstructionParameters::Circulant { connection_set })
        }
        Regime::PrismComplement => {
            let cert = certify(&prism_complement(d)?, "prism complement")?;
            (
                cert,
                ConstructionParameters::PrismComplement { beta: (d + 4) / 2 },
            )
        }
        Regime::Qd16 => {
            let cert = certify(&qd16_nut_graph(), "QD16 Cayley graph")?;
            (
                cert,
                ConstructionParameters::Qd16 {
                    generator_words: QD16_GENERATOR_WORDS,
                },
            )
        }
    };
    if certificate.order() != n || certificate.degree() != Some(d) {
        return Err(Error::Certification(format!(
            "constructed graph has order {} and degree {:?}, wanted ({n}, {d})",
            certificate.order(),
            certificate.degree()
        )));
    }
    Ok(ConstructionResult {
        certificate,
        regime,
        order: n,
        degree: d,
        parameters,
    })
}

/// Feasible `(n, d)` pairs with `d ∈ degrees` and `d + 4 ≤ n ≤ max_order`.
pub fn feasible_pairs(degrees: &[usize], max_order: usize) -> Vec<(usize, usize)> {
    degrees
        .iter()
        .flat_map(|&d| {
            (d + 4..=max_order)
                .filter(move |&n| cayley_feasible(n, d))
                .map(move |n| (n, d))
        })
        .collect()
}
