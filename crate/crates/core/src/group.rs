//! Finite groups given by explicit multiplication tables.
//!
//! Only the families needed for the constructions are provided: cyclic
//! groups `Z_n`, direct products, and the quasidihedral group of order 16
//! presented as `<s, t | s^8 = t^2 = 1, tst = s^3>`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major `order × order` table, `table[g * order + h] = g·h`.
    table: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
    name: String,
}

impl FiniteGroup {
    /// Builds a group from a raw table, checking the Latin-square and identity
    /// invariants. Associativity is `O(n^3)` and is left to [`Self::is_associative`].
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder { order, minimum: 1 });
        }
        if table.len() != order * order {
            return Err(Error::DimensionMismatch {
                expected: order * order,
                found: table.len(),
            });
        }
        if labels.len() != order {
            return Err(Error::DimensionMismatch {
                expected: order,
                found: labels.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: order,
            });
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e * order + g] == g && table[g * order + e] == g))
            .ok_or_else(|| Error::InvalidGenerators(String::from("table has no identity")))?;
        let group = FiniteGroup {
            order,
            table,
            identity,
            labels,
            name: name.into(),
        };
        if !group.is_latin_square() {
            return Err(Error::InvalidGenerators(String::from(
                "table is not a Latin square",
            )));
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    /// Product `g·h`. Panics if either index is out of range.
    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        assert!(
            g < self.order && h < self.order,
            "element index out of range"
        );
        self.table[g * self.order + h]
    }

    pub fn row(&self, g: usize) -> &[usize] {
        &self.table[g * self.order..(g + 1) * self.order]
    }

    /// The unique `h` with `g·h = e`.
    pub fn inverse(&self, g: usize) -> Result<usize> {
        if g >= self.order {
            return Err(Error::IndexOutOfRange {
                index: g,
                len: self.order,
            });
        }
        // The Latin-square property guarantees exactly one match.
        Ok(self
            .row(g)
            .iter()
            .position(|&x| x == self.identity)
            .expect("latin square row"))
    }

    pub fn is_latin_square(&self) -> bool {
        let n = self.order;
        let mut seen = alloc::vec![false; n];
        for g in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..n {
                let x = self.table[g * n + h];
                if seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        for h in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for g in 0..n {
                let x = self.table[g * n + h];
                if seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        true
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with every element of the group.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }
}

/// `Z_n` on residues `0..n` with `i·j = (i + j) mod n`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder {
            order: 0,
            minimum: 1,
        });
    }
    let table = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i + j) % n))
        .collect();
    let labels = (0..n).map(|i| format!("{i}")).collect();
    FiniteGroup::from_table(format!("Z{n}"), n, table, labels)
}

/// `G × H` on pairs indexed `i_g·|H| + i_h`, multiplied componentwise.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xg, xh) = (x / nh, x % nh);
        for y in 0..n {
            let (yg, yh) = (y / nh, y % nh);
            table.push(g.mul(xg, yg) * nh + h.mul(xh, yh));
        }
    }
    let labels = (0..n)
        .map(|x| format!("({},{})", g.label(x / nh), h.label(x % nh)))
        .collect();
    FiniteGroup {
        order: n,
        table,
        identity: g.identity() * nh + h.identity(),
        labels,
        name: format!("{}x{}", g.name(), h.name()),
    }
}

/// Index of the normal form `s^i t^j` in [`quasidihedral_16`].
#[inline]
pub const fn qd16_index(s_power: usize, t_power: usize) -> usize {
    2 * (s_power % 8) + (t_power % 2)
}

fn qd16_label(i: usize, j: usize) -> String {
    match (i, j) {
        (0, 0) => String::from("e"),
        (0, 1) => String::from("t"),
        (1, 0) => String::from("s"),
        (1, 1) => String::from("s t"),
        (i, 0) => format!("s^{i}"),
        (i, _) => format!("s^{i} t"),
    }
}

/// The quasidihedral (semidihedral) group of order 16.
///
/// Elements are normal forms `s^i t^j` with index `2i + j`. Products use the
/// rewriting rule `t·s^k = s^{3k} t`, so
/// `(s^a t^b)(s^c t^e) = s^{a + c·3^b} t^{b + e}`.
pub fn quasidihedral_16() -> FiniteGroup {
    let mut table = Vec::with_capacity(256);
    for x in 0..16 {
        let (a, b) = (x / 2, x % 2);
        for y in 0..16 {
            let (c, e) = (y / 2, y % 2);
            let twist = if b == 1 { 3 } else { 1 };
            table.push(qd16_index(a + c * twist, b + e));
        }
    }
    let labels = (0..16).map(|x| qd16_label(x / 2, x % 2)).collect();
    FiniteGroup::from_table("QD16", 16, table, labels).expect("QD16 table is a valid group table")
}

/// A generator letter of the QD16 presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qd16Letter {
    S,
    T,
}

/// Parses words such as `"tsts^2"` or `"s^2 t"`. Whitespace is ignored and
/// `^k` raises the preceding letter to the `k`-th power.
pub fn parse_qd16_word(word: &str) -> Result<Vec<Qd16Letter>> {
    let bytes = word.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let letter = match bytes[i] {
            b's' => Qd16Letter::S,
            b't' => Qd16Letter::T,
            b' ' | b'\t' | b'*' => {
                i += 1;
                continue;
            }
            _ => return Err(Error::InvalidWord { offset: i }),
        };
        i += 1;
        let mut power = 1usize;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(Error::InvalidWord { offset: start });
            }
            power = word[start..i]
                .parse()
                .map_err(|_| Error::InvalidWord { offset: start })?;
        }
        letters.extend(core::iter::repeat_n(letter, power));
    }
    Ok(letters)
}

/// Reduces a word to its normal form `s^i t^j` and returns the element index.
///
/// Applies `s^8 = t^2 = 1` and `t·s = s^3·t` letter by letter without
/// consulting the multiplication table.
pub fn reduce_word(word: &[Qd16Letter]) -> usize {
    let (mut s_power, mut t_power) = (0usize, 0usize);
    for letter in word {
        match letter {
            // s^i t^j · s = s^{i + 3^j} t^j
            Qd16Letter::S => s_power = (s_power + if t_power == 1 { 3 } else { 1 }) % 8,
            Qd16Letter::T => t_power ^= 1,
        }
    }
    qd16_index(s_power, t_power)
}

/// An identity-free, inverse-closed set of group elements, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    elements: Vec<usize>,
}

impl GeneratorSet {
    pub fn new(group: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        for &g in &elements {
            if g >= group.order() {
                return Err(Error::IndexOutOfRange {
                    index: g,
                    len: group.order(),
                });
            }
            if g == group.identity() {
                return Err(Error::InvalidGenerators(String::from(
                    "contains the identity",
                )));
            }
            let inv = group.inverse(g)?;
            if elements.binary_search(&inv).is_err() {
                return Err(Error::InvalidGenerators(format!(
                    "not closed under inverses: {} has inverse {} outside the set",
                    group.label(g),
                    group.label(inv)
                )));
            }
        }
        Ok(GeneratorSet { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}
