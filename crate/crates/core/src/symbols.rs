//! Symbols for the hyperoctahedral group.
//!
//! A symbol at parameter `(c₁, κ)` with `c₁ = mκ + r`, `0 ≤ r < κ`, has a first row of
//! `N + m` entries congruent to `r` modulo `κ` and a second row of `N` multiples of `κ`.
//! Rows are stored normalized: the first row as `(β − r)/κ` and the second as `γ/κ`,
//! which makes every stored entry a non-negative integer.

use std::collections::BTreeMap;
use std::fmt;

use num::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::combinatorics::{binomial, dagger, partitions_in_box, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BSymbol {
    beta: Vec<i64>,
    gamma: Vec<i64>,
    kappa: Rational,
    r: Rational,
}

/// Multiset of symbol entries, each with multiplicity 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymbolContent {
    pub multiplicities: BTreeMap<i64, u8>,
}

impl SymbolContent {
    pub fn count(&self, entry: i64) -> u8 {
        self.multiplicities.get(&entry).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.multiplicities.values().map(|&c| c as usize).sum()
    }

    /// `n_i ≥ n_{i+1}` for all `i ≥ 0`.
    pub fn is_weakly_decreasing(&self) -> bool {
        let Some(&max) = self.multiplicities.keys().next_back() else {
            return true;
        };
        (0..=max).all(|i| self.count(i) >= self.count(i + 1))
    }
}

/// Splits `c₁ = mκ + r` with `m ∈ ℕ` and `0 ≤ r < κ`.
pub fn split_parameter(c1: &Rational, kappa: &Rational) -> Result<(i64, Rational)> {
    if !kappa.is_positive() {
        return Err(Error::Precondition(format!("symbols need kappa > 0, got {kappa}")));
    }
    if c1.is_negative() {
        return Err(Error::NegativeParameter(format!("symbols need c1 >= 0, got {c1}")));
    }
    let m = (c1 / kappa).floor().to_integer().to_i64().expect("small quotient");
    let r = c1 - kappa * rat(m);
    Ok((m, r))
}

fn strictly_increasing(row: &[i64]) -> bool {
    row.windows(2).all(|w| w[0] < w[1]) && row.first().map_or(true, |&x| x >= 0)
}

impl BSymbol {
    /// A symbol from normalized rows. The first row must be longer than or as long as
    /// the second; both must be strictly increasing and non-negative.
    pub fn new(beta: Vec<i64>, gamma: Vec<i64>, kappa: Rational, r: Rational) -> Result<Self> {
        if !kappa.is_positive() || r.is_negative() || r >= kappa {
            return Err(Error::Precondition(format!("need kappa > 0 and 0 <= r < kappa, got ({kappa}, {r})")));
        }
        if beta.len() < gamma.len() {
            return Err(Error::Precondition("first row shorter than second".into()));
        }
        if !strictly_increasing(&beta) || !strictly_increasing(&gamma) {
            return Err(Error::Precondition("rows must be strictly increasing and non-negative".into()));
        }
        let s = BSymbol { beta, gamma, kappa, r };
        if s.rank() < 0 {
            return Err(Error::Precondition("entries too small for any rank".into()));
        }
        Ok(s)
    }

    /// Integral symbol at `κ = 1`, `r = 0`.
    pub fn integral(beta: Vec<i64>, gamma: Vec<i64>) -> Result<Self> {
        Self::new(beta, gamma, rat(1), rat(0))
    }

    /// Normalized first row.
    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    /// Normalized second row.
    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    /// Length of the second row.
    pub fn big_n(&self) -> usize {
        self.gamma.len()
    }

    /// Row length difference.
    pub fn m(&self) -> usize {
        self.beta.len() - self.gamma.len()
    }

    /// The actual entries `κβ + r` of the first row.
    pub fn beta_entries(&self) -> Vec<Rational> {
        self.beta.iter().map(|&b| &self.kappa * rat(b) + &self.r).collect()
    }

    /// The actual entries `κγ` of the second row.
    pub fn gamma_entries(&self) -> Vec<Rational> {
        self.gamma.iter().map(|&g| &self.kappa * rat(g)).collect()
    }

    /// The rank `n` solving the weight equation, in normalized form
    /// `Σβ + Σγ = n + N² + N(m − 1) + C(m, 2)`.
    pub fn rank(&self) -> i64 {
        let n = self.big_n() as i64;
        let m = self.m() as i64;
        let total: i64 = self.beta.iter().chain(&self.gamma).sum();
        total - n * n - n * (m - 1) - m * (m - 1) / 2
    }

    /// The weight equation with actual entries:
    /// `Σβ + Σγ = nκ + κN² + N(c₁ − κ) + κ C(m, 2) + rm`.
    pub fn weight_equation_holds(&self, n: usize) -> bool {
        let big_n = rat(self.big_n() as i64);
        let m = self.m() as i64;
        let c1 = &self.kappa * rat(m) + &self.r;
        let lhs: Rational = self.beta_entries().into_iter().chain(self.gamma_entries()).sum();
        let rhs = rat(n as i64) * &self.kappa
            + &self.kappa * &big_n * &big_n
            + &big_n * (c1 - &self.kappa)
            + &self.kappa * rat(m * (m - 1) / 2)
            + &self.r * rat(m);
        lhs == rhs
    }

    /// The `i`-fold shift `S ↦ S[1]`.
    pub fn shift(&self, i: usize) -> BSymbol {
        let mut beta: Vec<i64> = (0..i as i64).collect();
        beta.extend(self.beta.iter().map(|&b| b + i as i64));
        let mut gamma: Vec<i64> = (0..i as i64).collect();
        gamma.extend(self.gamma.iter().map(|&g| g + i as i64));
        BSymbol { beta, gamma, kappa: self.kappa.clone(), r: self.r.clone() }
    }

    /// Undoes `i` shifts, if the symbol is a shift by at least `i`.
    pub fn unshift(&self, i: usize) -> Option<BSymbol> {
        let k = i as i64;
        let prefix: Vec<i64> = (0..k).collect();
        if self.gamma.len() < i || self.beta[..i.min(self.beta.len())] != prefix[..] || self.gamma[..i] != prefix[..] {
            return None;
        }
        Some(BSymbol {
            beta: self.beta[i..].iter().map(|&b| b - k).collect(),
            gamma: self.gamma[i..].iter().map(|&g| g - k).collect(),
            kappa: self.kappa.clone(),
            r: self.r.clone(),
        })
    }

    /// Content of the symbol, in normalized entries. For `r > 0` the two rows live in
    /// different residue classes, so the content is only meaningful at `r = 0`.
    pub fn content(&self) -> SymbolContent {
        let mut multiplicities = BTreeMap::new();
        for &e in self.beta.iter().chain(&self.gamma) {
            *multiplicities.entry(e).or_insert(0u8) += 1;
        }
        SymbolContent { multiplicities }
    }

    /// The bipartition labelled by the symbol.
    pub fn bipartition(&self) -> Bipartition {
        let decode = |row: &[i64]| {
            let mut parts: Vec<u32> = row.iter().enumerate().map(|(i, &e)| (e - i as i64) as u32).collect();
            parts.reverse();
            Partition::new(parts).expect("strictly increasing rows decode to partitions")
        };
        Bipartition::new(decode(&self.beta), decode(&self.gamma))
    }

    /// Cuspidal symbols have weakly decreasing content multiplicities.
    pub fn is_cuspidal(&self) -> bool {
        self.content().is_weakly_decreasing()
    }

    /// The pair `(k_F, C(2k_F + m, k_F))` with `k_F = N − #{i : n_i = 2}`.
    pub fn family_k_invariant(&self) -> (u64, u64) {
        let doubles = self.content().multiplicities.values().filter(|&&c| c == 2).count();
        let k = (self.big_n() - doubles) as u64;
        (k, binomial(2 * k + self.m() as u64, k))
    }

    /// The symbol `S̄` labelling `π_S ⊗ sgn`, built with the cut-off `t`
    /// (default: the largest entry).
    pub fn bar(&self, t: Option<i64>) -> Result<BSymbol> {
        if self.kappa != rat(1) || !self.r.is_zero() {
            return Err(Error::Precondition("bar is defined for integral symbols at kappa = 1".into()));
        }
        let max = self.beta.iter().chain(&self.gamma).copied().max().unwrap_or(0);
        let t = t.unwrap_or(max);
        if t < max {
            return Err(Error::Precondition(format!("cut-off {t} is below the largest entry {max}")));
        }
        let complement = |row: &[i64]| -> Vec<i64> { (0..=t).filter(|x| !row.contains(&(t - x))).collect() };
        Ok(BSymbol { beta: complement(&self.gamma), gamma: complement(&self.beta), kappa: rat(1), r: rat(0) })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "beta": self.beta,
            "gamma": self.gamma,
            "m": self.m(),
            "kappa": self.kappa.to_string(),
            "r": self.r.to_string(),
        })
    }
}

impl Serialize for BSymbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Display for BSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[i64]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} ; {})", row(&self.beta), row(&self.gamma))
    }
}

/// The symbol of `bp` with second-row length `N` at parameter `(c₁, κ)`.
pub fn symbol_of(bp: &Bipartition, big_n: usize, c1: &Rational, kappa: &Rational) -> Result<BSymbol> {
    let (m, r) = split_parameter(c1, kappa)?;
    let m = m as usize;
    if bp.first.len() > big_n + m || bp.second.len() > big_n {
        return Err(Error::Precondition(format!("N = {big_n} is not large enough for {bp}")));
    }
    let beta = (1..=big_n + m).map(|i| bp.first.part(big_n + m - i) as i64 + i as i64 - 1).collect();
    let gamma = (1..=big_n).map(|j| bp.second.part(big_n - j) as i64 + j as i64 - 1).collect();
    Ok(BSymbol { beta, gamma, kappa: kappa.clone(), r })
}

/// The integral parameter `m = c₁/κ`, or an error when the ratio is not a natural number.
pub fn integral_ratio(c1: &Rational, kappa: &Rational) -> Result<usize> {
    let (m, r) = split_parameter(c1, kappa)?;
    if !r.is_zero() {
        return Err(Error::Precondition(format!("c1/kappa = {} is not an integer", c1 / kappa)));
    }
    Ok(m as usize)
}

/// Content of the normalized symbol of `bp` at `(m, 1)` with `N = max(n, 1)`.
pub fn family_content(bp: &Bipartition, m: usize) -> SymbolContent {
    let big_n = bp.size().max(1);
    symbol_of(bp, big_n, &rat(m as i64), &rat(1)).expect("N >= n is large enough").content()
}

/// Whether two bipartitions of the same rank have equal symbol contents at `(c₁, κ)`,
/// with `c₁/κ` a natural number.
pub fn same_lusztig_family(bp1: &Bipartition, bp2: &Bipartition, c1: &Rational, kappa: &Rational) -> Result<bool> {
    let m = integral_ratio(c1, kappa)?;
    if bp1.size() != bp2.size() {
        return Err(Error::Precondition("bipartitions of different ranks".into()));
    }
    Ok(family_content(bp1, m) == family_content(bp2, m))
}

/// The family `{(λ, λ†) : λ ⊆ (k^{k+m})}` of bipartitions of `k(k+m)`, sorted.
pub fn cuspidal_family(k: u32, m: u32) -> Vec<Bipartition> {
    let mut out: Vec<Bipartition> = partitions_in_box((k + m) as usize, k)
        .into_iter()
        .map(|lam| {
            let d = dagger(&lam, k, m as i64).expect("lambda fits the box");
            Bipartition::new(lam, d)
        })
        .collect();
    out.sort();
    out
}

/// The `k > 0` with `n = k(k + m)`, if any.
pub fn cuspidal_k(n: usize, m: usize) -> Option<usize> {
    (1..=n).take_while(|k| k * (k + m) <= n).find(|k| k * (k + m) == n)
}

/// Number of symbols of rank `n` with second-row length `N` in normalized form, counted
/// by brute force; equals the number of bipartitions of `n` once `N ≥ n`.
pub fn count_symbols(n: usize, big_n: usize, m: usize) -> usize {
    let target = n as i64 + (big_n * big_n) as i64 + big_n as i64 * (m as i64 - 1) + (m * m.saturating_sub(1) / 2) as i64;
    let max_entry = target.max(0);
    let mut count = 0;
    for beta in increasing_rows(big_n + m, max_entry) {
        let sb: i64 = beta.iter().sum();
        if sb > target {
            continue;
        }
        for gamma in increasing_rows(big_n, max_entry) {
            if sb + gamma.iter().sum::<i64>() == target {
                count += 1;
            }
        }
    }
    count
}

fn increasing_rows(len: usize, max: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, start: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..=max {
            cur.push(v);
            rec(len, v + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, 0, max, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bipartitions;

    fn bp(a: &[u32], b: &[u32]) -> Bipartition {
        Bipartition::from_parts(a, b).unwrap()
    }

    #[test]
    fn worked_example() {
        let s = symbol_of(&bp(&[2, 1], &[1]), 3, &rat(1), &rat(1)).unwrap();
        assert_eq!(s.beta(), &[0, 1, 3, 5]);
        assert_eq!(s.gamma(), &[0, 1, 3]);
        assert!(s.weight_equation_holds(4));
        assert_eq!(s.rank(), 4);
        let small = BSymbol::integral(vec![1, 3], vec![1]).unwrap();
        assert_eq!(small.shift(2), s);
        assert_eq!(s.unshift(2), Some(small));
        assert_eq!(s.bipartition(), bp(&[2, 1], &[1]));
        assert!(!s.is_cuspidal());
    }

    #[test]
    fn cuspidal_symbol_example() {
        let s = symbol_of(&bp(&[1], &[3, 2]), 2, &rat(1), &rat(1)).unwrap();
        assert_eq!(s.beta(), &[0, 1, 3]);
        assert_eq!(s.gamma(), &[2, 4]);
        assert!(s.is_cuspidal());
        assert!(s.content().multiplicities.values().all(|&c| c == 1));
        assert_eq!(s.family_k_invariant(), (2, 10));
    }

    #[test]
    fn bar_example() {
        let s = symbol_of(&bp(&[2, 1], &[1]), 3, &rat(1), &rat(1)).unwrap();
        let b = s.bar(Some(5)).unwrap();
        assert_eq!(b.beta(), &[0, 1, 3]);
        assert_eq!(b.gamma(), &[1, 3]);
        assert_eq!(b.bipartition(), bp(&[1], &[2, 1]));
        assert!(s.bar(Some(4)).is_err());
    }

    #[test]
    fn families_and_rejections() {
        let one = rat(1);
        assert!(same_lusztig_family(&bp(&[1], &[3, 2]), &bp(&[], &[3, 3]), &one, &one).unwrap());
        assert!(!same_lusztig_family(&bp(&[6], &[]), &bp(&[], &[6]), &one, &one).unwrap());
        assert!(same_lusztig_family(&bp(&[1], &[]), &bp(&[1], &[]), &crate::exactalg::ratio(1, 2), &one).is_err());
    }

    #[test]
    fn cuspidal_families_sizes() {
        assert_eq!(cuspidal_family(2, 1).len(), 10);
        assert_eq!(cuspidal_family(1, 2).len(), 4);
        assert!(cuspidal_family(2, 1).contains(&bp(&[2, 1], &[2, 1])));
        assert_eq!(cuspidal_k(6, 1), Some(2));
        assert_eq!(cuspidal_k(5, 1), None);
        assert_eq!(cuspidal_k(3, 2), Some(1));
    }

    #[test]
    fn symbols_biject_with_bipartitions() {
        for n in 0..=3 {
            assert_eq!(count_symbols(n, n.max(1), 1), bipartitions(n).len());
        }
    }

    #[test]
    fn general_parameter_entries() {
        let s = symbol_of(&bp(&[1], &[1]), 2, &crate::exactalg::ratio(5, 2), &rat(2)).unwrap();
        assert_eq!(s.m(), 1);
        assert_eq!(s.r(), &crate::exactalg::ratio(1, 2));
        assert!(s.weight_equation_holds(2));
    }
}
