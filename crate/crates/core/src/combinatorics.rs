//! Partitions, bipartitions and the combinatorics built on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as a weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(cols: u32, rows: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Boxes as 0-based (row, column) pairs in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().enumerate().all(|(i, &p)| p <= self.parts[i])
    }

    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.boxes()
            .map(|(i, j)| {
                (self.parts[i] as usize - j - 1) + (conj.parts[j] as usize - i - 1) + 1
            })
            .collect()
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn num_standard_tableaux(&self) -> u64 {
        let n = self.size() as u64;
        let mut num: u128 = 1;
        for k in 1..=n {
            num *= k as u128;
        }
        let den: u128 = self.hook_lengths().iter().map(|&h| h as u128).product();
        (num / den) as u64
    }

    /// Rows that end in a removable corner.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.part(i) > self.part(i + 1)).collect()
    }

    /// Text form used by the CLI, e.g. `2,1` (empty string for the empty partition).
    pub fn compact(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.compact())
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p as u32);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// An ordered pair of partitions labelling an irreducible of the hyperoctahedral group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Partition, Partition)", into = "(Partition, Partition)")]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl From<(Partition, Partition)> for Bipartition {
    fn from((first, second): (Partition, Partition)) -> Self {
        Bipartition { first, second }
    }
}

impl From<Bipartition> for (Partition, Partition) {
    fn from(bp: Bipartition) -> Self {
        (bp.first, bp.second)
    }
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(first: &[u32], second: &[u32]) -> Result<Self> {
        Ok(Bipartition {
            first: Partition::new(first.to_vec())?,
            second: Partition::new(second.to_vec())?,
        })
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// Exchanges the two components.
    pub fn swapped(&self) -> Bipartition {
        Bipartition { first: self.second.clone(), second: self.first.clone() }
    }

    /// The label of the sign twist: `(a, b)` goes to `(b*, a*)`.
    pub fn sign_twist(&self) -> Bipartition {
        Bipartition { first: self.second.conjugate(), second: self.first.conjugate() }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.first.compact(), self.second.compact())
    }
}

/// All bipartitions of `n`, ordered by the size of the first component (descending)
/// and then lexicographically.
pub fn bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for r in (0..=n).rev() {
        for a in partitions(r) {
            for b in partitions(n - r) {
                out.push(Bipartition::new(a.clone(), b));
            }
        }
    }
    out
}

/// An unordered pair `{λ, μ}`; when `λ = μ` a split index 1 or 2 selects one of the two
/// constituents of the restriction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawUnordered", into = "RawUnordered")]
pub struct UnorderedBipartition {
    larger: Partition,
    smaller: Partition,
    split: Option<u8>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawUnordered {
    pair: (Partition, Partition),
    split: Option<u8>,
}

impl TryFrom<RawUnordered> for UnorderedBipartition {
    type Error = Error;

    fn try_from(raw: RawUnordered) -> Result<Self> {
        UnorderedBipartition::new(raw.pair.0, raw.pair.1, raw.split)
    }
}

impl From<UnorderedBipartition> for RawUnordered {
    fn from(u: UnorderedBipartition) -> Self {
        RawUnordered { pair: (u.larger, u.smaller), split: u.split }
    }
}

impl UnorderedBipartition {
    pub fn new(a: Partition, b: Partition, split: Option<u8>) -> Result<Self> {
        let (larger, smaller) = if a >= b { (a, b) } else { (b, a) };
        match (larger == smaller, split) {
            (true, Some(1 | 2)) | (false, None) => Ok(UnorderedBipartition { larger, smaller, split }),
            (true, _) => Err(Error::Precondition(format!(
                "the pair {{{larger},{smaller}}} has equal components and needs split index 1 or 2"
            ))),
            (false, Some(_)) => Err(Error::Precondition(format!(
                "the pair {{{larger},{smaller}}} has distinct components and takes no split index"
            ))),
        }
    }

    /// The label obtained by restricting the irreducible with label `bp` when it stays
    /// irreducible; `None` for `(λ, λ)`.
    pub fn from_bipartition(bp: &Bipartition) -> Option<Self> {
        if bp.first == bp.second {
            None
        } else {
            UnorderedBipartition::new(bp.first.clone(), bp.second.clone(), None).ok()
        }
    }

    pub fn pair(&self) -> (&Partition, &Partition) {
        (&self.larger, &self.smaller)
    }

    pub fn split(&self) -> Option<u8> {
        self.split
    }

    pub fn size(&self) -> usize {
        self.larger.size() + self.smaller.size()
    }

    /// The bipartitions whose restriction contains this label.
    pub fn sources(&self) -> Vec<Bipartition> {
        let bp = Bipartition::new(self.larger.clone(), self.smaller.clone());
        if self.split.is_some() {
            vec![bp]
        } else {
            let sw = bp.swapped();
            vec![bp, sw]
        }
    }
}

impl fmt::Display for UnorderedBipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}|{}}}", self.larger.compact(), self.smaller.compact())?;
        if let Some(s) = self.split {
            write!(f, "_{s}")?;
        }
        Ok(())
    }
}

/// All irreducible labels of the type D group of rank `n`.
pub fn unordered_bipartitions(n: usize) -> Vec<UnorderedBipartition> {
    let mut out = Vec::new();
    for bp in bipartitions(n) {
        if bp.first > bp.second {
            out.push(UnorderedBipartition::new(bp.first, bp.second, None).expect("distinct"));
        } else if bp.first == bp.second {
            for s in [1, 2] {
                out.push(UnorderedBipartition::new(bp.first.clone(), bp.second.clone(), Some(s)).expect("split"));
            }
        }
    }
    out.sort();
    out
}

/// All partitions contained in the box with `rows` rows and `cols` columns, sorted.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn rec(row: usize, rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing parts"));
        if row == rows {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(row + 1, rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Box contents `j - i` of `p`, sorted.
pub fn contents(p: &Partition) -> Vec<i64> {
    let mut c: Vec<i64> = p.boxes().map(|(i, j)| j as i64 - i as i64).collect();
    c.sort_unstable();
    c
}

/// The rotated complement of `lam` inside the box with `rows` rows and `cols` columns.
fn rotated_complement(lam: &Partition, rows: usize, cols: u32) -> Partition {
    let parts = (0..rows).map(|i| cols - lam.part(rows - 1 - i)).collect();
    Partition::new(parts).expect("complement of a partition in a box is a partition")
}

/// The map `λ ↦ λ†`: transpose of the rotated complement of `λ` in the box with
/// `k + m` rows and `k` columns.
///
/// `m` may be negative as long as `k + m ≥ 0`; then
/// `dagger(dagger(λ, k, m), k + m, -m) = λ`.
pub fn dagger(lam: &Partition, k: u32, m: i64) -> Result<Partition> {
    let rows = k as i64 + m;
    if rows < 0 {
        return Err(Error::Precondition(format!("box height k+m = {rows} is negative")));
    }
    let rows = rows as usize;
    if !lam.fits_in_box(rows, k) {
        return Err(Error::DoesNotFitBox { partition: lam.to_string(), rows, cols: k as usize });
    }
    Ok(rotated_complement(lam, rows, k).conjugate())
}

/// Littlewood–Richardson coefficient `c^ν_{λ,μ}`, counted as semistandard fillings of
/// `ν/λ` with content `μ` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() + mu.size() != nu.size() || !nu.contains(lam) || !nu.contains(mu) {
        return 0;
    }
    // Cells of the skew shape in reverse reading order: rows top to bottom, right to left.
    let mut cells = Vec::new();
    for i in 0..nu.len() {
        for j in (lam.part(i) as usize..nu.part(i) as usize).rev() {
            cells.push((i, j));
        }
    }
    let rows = nu.len();
    let width = nu.part(0) as usize;
    let mut filling = vec![vec![0usize; width]; rows];
    let mut counts = vec![0u32; mu.len() + 1];

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        filling: &mut Vec<Vec<usize>>,
        counts: &mut Vec<u32>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let mut total = 0;
        for v in 1..=mu.len() {
            if counts[v] >= mu.part(v - 1) {
                continue;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            // Right neighbour in the skew shape, already filled.
            if j + 1 < filling[i].len() && filling[i][j + 1] != 0 && v > filling[i][j + 1] {
                continue;
            }
            // Cell above, already filled when it lies in the skew shape.
            if i > 0 && filling[i - 1][j] != 0 && v <= filling[i - 1][j] {
                continue;
            }
            filling[i][j] = v;
            counts[v] += 1;
            total += rec(idx + 1, cells, mu, filling, counts);
            counts[v] -= 1;
            filling[i][j] = 0;
        }
        total
    }

    rec(0, &cells, mu, &mut filling, &mut counts)
}

/// True iff the parts of `lam` can be grouped so that the group sums are the parts
/// of `mu`, i.e. the Young subgroup of `lam` is conjugate to a subgroup of that of `mu`.
pub fn refinement_le(lam: &Partition, mu: &Partition) -> bool {
    if lam.size() != mu.size() {
        return false;
    }
    fn rec(parts: &[u32], bins: &mut Vec<u32>) -> bool {
        let Some((&first, rest)) = parts.split_first() else {
            return bins.iter().all(|&b| b == 0);
        };
        for b in 0..bins.len() {
            if bins[b] < first || bins[..b].contains(&bins[b]) {
                continue;
            }
            bins[b] -= first;
            let ok = rec(rest, bins);
            bins[b] += first;
            if ok {
                return true;
            }
        }
        false
    }
    let mut bins = mu.parts().to_vec();
    rec(lam.parts(), &mut bins)
}

/// Standard Young tableaux of shape `lam`; each tableau lists the (row, column) box of
/// the letters `1..=n` in order.
pub fn standard_tableaux(lam: &Partition) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        lam: &Partition,
        fill: &mut Vec<u32>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == lam.size() {
            out.push(cur.clone());
            return;
        }
        for i in 0..lam.len() {
            let j = fill[i];
            if j < lam.part(i) && (i == 0 || fill[i - 1] > j) {
                fill[i] += 1;
                cur.push((i, j as usize));
                rec(lam, fill, cur, out);
                cur.pop();
                fill[i] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(lam, &mut vec![0; lam.len()], &mut Vec::new(), &mut out);
    out
}

/// `n choose k` as an exact integer.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
