//! Exact integer linear algebra for adjacency nullspaces.
//!
//! Elimination is fraction-free Gauss-Jordan over `BigInt`: each pivot row
//! clears its column in every other row, and rows are divided by their
//! content after every update to keep entries small. No floating point is
//! involved anywhere.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: alloc::vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[&[T]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row.iter().map(|&x| x.into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Symmetric 0/1 with zero diagonal.
    pub fn is_adjacency(&self) -> bool {
        self.is_symmetric()
            && (0..self.rows).all(|r| self.get(r, r).is_zero())
            && self.entries.iter().all(|x| x.is_zero() || x.is_one())
    }
}

/// Exact rational vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector {
    entries: Vec<BigRational>,
}

impl RationalVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        RationalVector { entries }
    }

    pub fn from_integers<T: Into<BigInt>>(entries: impl IntoIterator<Item = T>) -> Self {
        RationalVector {
            entries: entries
                .into_iter()
                .map(|x| BigRational::from_integer(x.into()))
                .collect(),
        }
    }

    pub fn zeros(len: usize) -> Self {
        RationalVector {
            entries: alloc::vec![BigRational::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn sum(&self) -> BigRational {
        self.entries
            .iter()
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Rescales to coprime integers with the first nonzero entry positive.
    /// The zero vector is returned unchanged.
    pub fn canonical(&self) -> RationalVector {
        let Some(first) = self.entries.iter().find(|x| !x.is_zero()) else {
            return self.clone();
        };
        let denom_lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scaled: Vec<BigInt> = self
            .entries
            .iter()
            .map(|x| x.numer() * (&denom_lcm / x.denom()))
            .collect();
        let mut content = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if first.is_negative() {
            content = -content;
        }
        RationalVector::from_integers(scaled.into_iter().map(|x| x / &content))
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Integer entries, if every entry is an integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn permuted(&self, perm: &[usize]) -> RationalVector {
        let mut out = alloc::vec![BigRational::zero(); self.len()];
        for (i, x) in self.entries.iter().enumerate() {
            out[perm[i]] = x.clone();
        }
        RationalVector { entries: out }
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Canonical basis of a nullspace: one vector per free column of the reduced
/// row echelon form, each rescaled by [`RationalVector::canonical`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    vectors: Vec<RationalVector>,
    rank: usize,
}

impl KernelBasis {
    pub fn vectors(&self) -> &[RationalVector] {
        &self.vectors
    }

    pub fn nullity(&self) -> usize {
        self.vectors.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn into_vectors(self) -> Vec<RationalVector> {
        self.vectors
    }
}

pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        m.set(u, v, BigInt::one());
        m.set(v, u, BigInt::one());
    }
    m
}

fn divide_by_content(row: &mut [BigInt]) {
    let content = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !content.is_zero() && !content.is_one() {
        row.iter_mut().for_each(|x| *x /= &content);
    }
}

/// Fraction-free Gauss-Jordan elimination. Returns the reduced rows (only the
/// first `rank` are nonzero) and the pivot column of each nonzero row.
fn integer_rref(m: &IntMatrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows.len() {
            break;
        }
        // Smallest nonzero magnitude limits coefficient growth.
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&a, &b| rows[a][c].magnitude().cmp(rows[b][c].magnitude()))
        else {
            continue;
        };
        rows.swap(r, p);
        divide_by_content(&mut rows[r]);
        let (before, rest) = rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
        let pivot = pivot_row[c].clone();
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let g = row[c].gcd(&pivot);
            let row_mul = &pivot / &g;
            let pivot_mul = &row[c] / &g;
            // The pivot row is zero left of `c`, so those entries only scale.
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if y.is_zero() {
                    *x *= &row_mul;
                } else {
                    *x = &*x * &row_mul - y * &pivot_mul;
                }
            }
            divide_by_content(row);
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

/// Exact canonical basis of `{v : Mv = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> KernelBasis {
    let (rows, pivots) = integer_rref(m);
    let rank = pivots.len();
    let mut is_pivot = alloc::vec![false; m.cols()];
    pivots.iter().for_each(|&c| is_pivot[c] = true);

    let vectors = (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            // Row i reads p_i·x_{c_i} + Σ_free a_{i,f'}·x_{f'} = 0.
            let mut v = alloc::vec![BigRational::zero(); m.cols()];
            v[f] = BigRational::one();
            for (i, &c) in pivots.iter().enumerate() {
                if !rows[i][f].is_zero() {
                    v[c] = -BigRational::new(rows[i][f].clone(), rows[i][c].clone());
                }
            }
            RationalVector::new(v).canonical()
        })
        .collect();
    KernelBasis { vectors, rank }
}

pub fn nullity(m: &IntMatrix) -> usize {
    m.cols() - integer_rref(m).1.len()
}

pub fn is_full_vector(v: &RationalVector) -> bool {
    v.entries().iter().all(|x| !x.is_zero())
}

pub fn matvec(m: &IntMatrix, v: &RationalVector) -> Result<RationalVector> {
    if m.cols() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: m.cols(),
            found: v.len(),
        });
    }
    let entries = (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .zip(v.entries())
                .filter(|(a, _)| !a.is_zero())
                .fold(BigRational::zero(), |acc, (a, x)| acc + x * a)
        })
        .collect();
    Ok(RationalVector::new(entries))
}
