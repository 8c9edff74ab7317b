//! Character tables, Frobenius induction from parabolic subgroups and branching checks.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{Signed, ToPrimitive};

use super::dihedral::{build_dihedral_table, DihedralElement, ParabolicChar};
use super::hyperoctahedral::HyperoctahedralRep;
use super::perm::{Perm, SignedPerm};
use super::symmetric::SeminormalRep;
use super::{irreducible_labels, IrrLabel};
use crate::combinatorics::{bipartitions, factorial, partitions, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{rat, CoxeterGroup, Cyclotomic, CyclotomicField, Rational, Scalar};

/// Identifies a conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKey {
    /// Cycle type of a permutation.
    Symmetric(Partition),
    /// Positive and negative cycle lengths of a signed permutation.
    Hyperoctahedral(Bipartition),
    /// `{r^{±j}}` with `0 ≤ j ≤ m/2`.
    DihedralRotation(usize),
    /// The reflections `s_l` with `l ≡ parity (mod 2)`; parity is always 0 for odd `m`.
    DihedralReflection(usize),
}

/// Values of a class function, one per class of the ambient table.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassValues(pub Vec<Cyclotomic>);

/// The character table of a finite group with entries in a cyclotomic field.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: CoxeterGroup,
    field: CyclotomicField,
    order: u64,
    classes: Vec<(ClassKey, u64)>,
    labels: Vec<IrrLabel>,
    rows: Vec<ClassValues>,
}

impl CharacterTable {
    pub fn new(
        group: CoxeterGroup,
        field: CyclotomicField,
        order: u64,
        classes: Vec<(ClassKey, u64)>,
        labels: Vec<IrrLabel>,
        rows: Vec<ClassValues>,
    ) -> Self {
        CharacterTable { group, field, order, classes, labels, rows }
    }

    /// The table of `group`; types A, B and I₂ are supported.
    pub fn of(group: &CoxeterGroup) -> Result<Self> {
        match *group {
            CoxeterGroup::A(n) => Ok(symmetric_table(n)),
            CoxeterGroup::B(n) => Ok(hyperoctahedral_table(n)),
            CoxeterGroup::I2(m) => build_dihedral_table(m),
            CoxeterGroup::D(_) => Err(Error::Precondition("type D characters come from restriction".into())),
        }
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[(ClassKey, u64)] {
        &self.classes
    }

    pub fn labels(&self) -> &[IrrLabel] {
        &self.labels
    }

    pub fn rows(&self) -> &[ClassValues] {
        &self.rows
    }

    pub fn row(&self, label: &IrrLabel) -> Option<&ClassValues> {
        self.labels.iter().position(|l| l == label).map(|i| &self.rows[i])
    }

    pub fn class_index(&self, key: &ClassKey) -> Option<usize> {
        self.classes.iter().position(|(k, _)| k == key)
    }

    /// `⟨χ, ψ⟩ = |G|⁻¹ Σ_C |C| χ(C) conj(ψ(C))`.
    pub fn inner_product(&self, chi: &ClassValues, psi: &ClassValues) -> Cyclotomic {
        let mut acc = self.field.zero();
        for ((_, size), (a, b)) in self.classes.iter().zip(chi.0.iter().zip(&psi.0)) {
            let term = a.mul_ref(&b.conj()).mul_ref(&self.field.from_rational(&rat(*size as i64)));
            acc = acc.add_ref(&term);
        }
        acc.mul_ref(&self.field.from_rational(&Rational::new(1.into(), (self.order as i64).into())))
    }

    /// Multiplicities of the irreducibles in a class function. Fails if a multiplicity
    /// is not a non-negative integer.
    pub fn decompose(&self, chi: &ClassValues) -> Result<BTreeMap<IrrLabel, u64>> {
        let mut out = BTreeMap::new();
        for (label, row) in self.labels.iter().zip(&self.rows) {
            let ip = self.inner_product(chi, row);
            let q = ip
                .to_rational()
                .filter(|q| q.is_integer() && !q.is_negative())
                .ok_or_else(|| Error::Precondition(format!("class function is not a character at {label}")))?;
            let k = q.to_integer().to_u64().expect("small multiplicity");
            if k > 0 {
                out.insert(label.clone(), k);
            }
        }
        Ok(out)
    }

    /// Whether the irreducible rows are orthonormal and there are as many as classes.
    pub fn is_orthonormal(&self) -> bool {
        if self.rows.len() != self.classes.len() {
            return false;
        }
        let one = self.field.one();
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in self.rows.iter().enumerate() {
                let ip = self.inner_product(a, b);
                let ok = if i == j { ip == one } else { ip.vanishes() };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// Centralizer order of a permutation of cycle type `lam`.
pub fn symmetric_centralizer(lam: &Partition) -> u64 {
    lam.parts()
        .iter()
        .counts()
        .into_iter()
        .map(|(&len, mult)| (len as u64).pow(mult as u32) * factorial(mult as u64))
        .product()
}

/// Centralizer order of a signed permutation in the class `(α, β)`.
pub fn hyperoctahedral_centralizer(class: &Bipartition) -> u64 {
    [&class.first, &class.second]
        .into_iter()
        .map(|p| {
            p.parts()
                .iter()
                .counts()
                .into_iter()
                .map(|(&len, mult)| (2 * len as u64).pow(mult as u32) * factorial(mult as u64))
                .product::<u64>()
        })
        .product()
}

fn rational_field() -> CyclotomicField {
    CyclotomicField::new(1)
}

fn symmetric_table(n: usize) -> CharacterTable {
    let field = rational_field();
    let order = factorial(n as u64);
    let classes: Vec<Partition> = partitions(n);
    let reps: Vec<Perm> = classes.iter().map(Perm::class_representative).collect();
    let labels = irreducible_labels(&CoxeterGroup::A(n));
    let rows = labels
        .iter()
        .map(|label| {
            let IrrLabel::Partition(lam) = label else { unreachable!("type A labels are partitions") };
            let rep = SeminormalRep::new(lam);
            ClassValues(reps.iter().map(|p| field.from_rational(&rep.character_value(p))).collect())
        })
        .collect();
    let classes = classes
        .into_iter()
        .map(|c| {
            let size = order / symmetric_centralizer(&c);
            (ClassKey::Symmetric(c), size)
        })
        .collect();
    CharacterTable::new(CoxeterGroup::A(n), field, order, classes, labels, rows)
}

fn hyperoctahedral_table(n: usize) -> CharacterTable {
    let field = rational_field();
    let order = (1u64 << n) * factorial(n as u64);
    let classes: Vec<Bipartition> = bipartitions(n);
    let reps: Vec<SignedPerm> = classes.iter().map(SignedPerm::class_representative).collect();
    let labels = irreducible_labels(&CoxeterGroup::B(n));
    let rows = labels
        .iter()
        .map(|label| {
            let IrrLabel::Bipartition(bp) = label else { unreachable!("type B labels are bipartitions") };
            let rep = HyperoctahedralRep::new(bp);
            ClassValues(reps.iter().map(|w| field.from_rational(&rep.character_value(w))).collect())
        })
        .collect();
    let classes = classes
        .into_iter()
        .map(|c| {
            let size = order / hyperoctahedral_centralizer(&c);
            (ClassKey::Hyperoctahedral(c), size)
        })
        .collect();
    CharacterTable::new(CoxeterGroup::B(n), field, order, classes, labels, rows)
}

/// A parabolic (or Young-type) subgroup, up to conjugacy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subgroup {
    /// The whole group.
    Whole,
    /// The Young subgroup `S_λ` of the symmetric group.
    Young(Partition),
    /// `B_r × B_{n-r}` inside `B_n`.
    BProduct(usize),
    /// `S_λ × B_{n-|λ|}` inside `B_n`.
    YoungTimesB { young: Partition, b_rank: usize },
    /// `⟨s⟩` inside `I₂(m)`.
    P1,
    /// `⟨t⟩` inside `I₂(m)`.
    P2,
}

/// An irreducible character of a [`Subgroup`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubgroupChar {
    Whole(IrrLabel),
    /// One partition per block of the Young subgroup, in block order.
    Young(Vec<Partition>),
    BProduct(Bipartition, Bipartition),
    YoungTimesB(Vec<Partition>, Bipartition),
    Parabolic(ParabolicChar),
}

/// An induced class function with its decomposition into irreducibles.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedCharacter {
    pub values: ClassValues,
    pub decomposition: BTreeMap<IrrLabel, u64>,
}

impl InducedCharacter {
    /// Whether the induced character is irreducible.
    pub fn is_irreducible(&self) -> bool {
        self.decomposition.len() == 1 && self.decomposition.values().all(|&k| k == 1)
    }
}

/// One conjugacy class of the subgroup: its size, the ambient class it fuses into and
/// the value of the character being induced.
struct SubClass {
    size: u64,
    fused: ClassKey,
    value: Rational,
}

impl Subgroup {
    fn check(&self, group: &CoxeterGroup) -> Result<()> {
        let ok = match (self, *group) {
            (Subgroup::Whole, _) => true,
            (Subgroup::Young(lam), CoxeterGroup::A(n)) => lam.size() == n,
            (Subgroup::BProduct(r), CoxeterGroup::B(n)) => *r <= n,
            (Subgroup::YoungTimesB { young, b_rank }, CoxeterGroup::B(n)) => young.size() + b_rank == n,
            (Subgroup::P1 | Subgroup::P2, CoxeterGroup::I2(_)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedSubgroup(format!("{self:?} in {group}")))
        }
    }

    /// The irreducible characters of the subgroup.
    pub fn irreducible_chars(&self, group: &CoxeterGroup) -> Result<Vec<SubgroupChar>> {
        self.check(group)?;
        Ok(match self {
            Subgroup::Whole => irreducible_labels(group).into_iter().map(SubgroupChar::Whole).collect(),
            Subgroup::Young(lam) => young_chars(lam).into_iter().map(SubgroupChar::Young).collect(),
            Subgroup::BProduct(r) => {
                let n = group.size();
                bipartitions(*r)
                    .into_iter()
                    .cartesian_product(bipartitions(n - r))
                    .map(|(a, b)| SubgroupChar::BProduct(a, b))
                    .collect()
            }
            Subgroup::YoungTimesB { young, b_rank } => young_chars(young)
                .into_iter()
                .cartesian_product(bipartitions(*b_rank))
                .map(|(a, b)| SubgroupChar::YoungTimesB(a, b))
                .collect(),
            Subgroup::P1 | Subgroup::P2 => {
                vec![SubgroupChar::Parabolic(ParabolicChar::Trivial), SubgroupChar::Parabolic(ParabolicChar::Psi)]
            }
        })
    }

    fn order(&self, group: &CoxeterGroup) -> u64 {
        match self {
            Subgroup::Whole => match *group {
                CoxeterGroup::A(n) => factorial(n as u64),
                CoxeterGroup::B(n) => (1u64 << n) * factorial(n as u64),
                CoxeterGroup::D(n) => (1u64 << (n - 1)) * factorial(n as u64),
                CoxeterGroup::I2(m) => 2 * m as u64,
            },
            Subgroup::Young(lam) => lam.parts().iter().map(|&p| factorial(p as u64)).product(),
            Subgroup::BProduct(r) => {
                let n = group.size();
                (1u64 << n) * factorial(*r as u64) * factorial((n - r) as u64)
            }
            Subgroup::YoungTimesB { young, b_rank } => {
                young.parts().iter().map(|&p| factorial(p as u64)).product::<u64>()
                    * (1u64 << b_rank)
                    * factorial(*b_rank as u64)
            }
            Subgroup::P1 | Subgroup::P2 => 2,
        }
    }
}

fn young_chars(lam: &Partition) -> Vec<Vec<Partition>> {
    lam.parts().iter().map(|&p| partitions(p as usize)).multi_cartesian_product().collect()
}

fn merge_parts<'a>(parts: impl IntoIterator<Item = &'a Partition>) -> Partition {
    let mut all: Vec<u32> = parts.into_iter().flat_map(|p| p.parts().iter().copied()).collect();
    all.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(all).expect("union of partitions")
}

/// Classes of a product of symmetric groups, with sizes and character values of the
/// product character `⊠ χ_{μ_i}`.
fn young_classes(blocks: &[Partition]) -> Vec<(Vec<Partition>, u64, Rational)> {
    let reps: Vec<SeminormalRep> = blocks.iter().map(SeminormalRep::new).collect();
    blocks
        .iter()
        .map(|mu| partitions(mu.size()))
        .multi_cartesian_product()
        .map(|classes| {
            let mut size = 1u64;
            let mut value = rat(1);
            for (c, rep) in classes.iter().zip(&reps) {
                size *= factorial(c.size() as u64) / symmetric_centralizer(c);
                value *= rep.character_value(&Perm::class_representative(c));
            }
            (classes, size, value)
        })
        .collect()
}

fn b_classes(bp: &Bipartition) -> Vec<(Bipartition, u64, Rational)> {
    let rep = HyperoctahedralRep::new(bp);
    let n = bp.size();
    let order = (1u64 << n) * factorial(n as u64);
    bipartitions(n)
        .into_iter()
        .map(|c| {
            let size = order / hyperoctahedral_centralizer(&c);
            let v = rep.character_value(&SignedPerm::class_representative(&c));
            (c, size, v)
        })
        .collect()
}

fn sub_classes(sub: &Subgroup, chi: &SubgroupChar, table: &CharacterTable) -> Result<Vec<SubClass>> {
    let mismatch = || Error::UnsupportedSubgroup(format!("character {chi:?} does not belong to {sub:?}"));
    Ok(match (sub, chi) {
        (Subgroup::Young(lam), SubgroupChar::Young(blocks)) => {
            if blocks.iter().map(Partition::size).collect::<Vec<_>>()
                != lam.parts().iter().map(|&p| p as usize).collect::<Vec<_>>()
            {
                return Err(mismatch());
            }
            young_classes(blocks)
                .into_iter()
                .map(|(cls, size, value)| SubClass { size, fused: ClassKey::Symmetric(merge_parts(&cls)), value })
                .collect()
        }
        (Subgroup::BProduct(r), SubgroupChar::BProduct(a, b)) => {
            if a.size() != *r || a.size() + b.size() != table.group().size() {
                return Err(mismatch());
            }
            let mut out = Vec::new();
            for (ca, sa, va) in b_classes(a) {
                for (cb, sb, vb) in b_classes(b) {
                    let fused = Bipartition::new(
                        merge_parts([&ca.first, &cb.first]),
                        merge_parts([&ca.second, &cb.second]),
                    );
                    out.push(SubClass { size: sa * sb, fused: ClassKey::Hyperoctahedral(fused), value: &va * &vb });
                }
            }
            out
        }
        (Subgroup::YoungTimesB { young, b_rank }, SubgroupChar::YoungTimesB(blocks, b)) => {
            let sizes: Vec<usize> = blocks.iter().map(Partition::size).collect();
            if sizes != young.parts().iter().map(|&p| p as usize).collect::<Vec<_>>() || b.size() != *b_rank {
                return Err(mismatch());
            }
            let mut out = Vec::new();
            for (cls, sa, va) in young_classes(blocks) {
                for (cb, sb, vb) in b_classes(b) {
                    let firsts: Vec<&Partition> = cls.iter().chain([&cb.first]).collect();
                    let fused = Bipartition::new(merge_parts(firsts), cb.second.clone());
                    out.push(SubClass { size: sa * sb, fused: ClassKey::Hyperoctahedral(fused), value: &va * &vb });
                }
            }
            out
        }
        (Subgroup::P1 | Subgroup::P2, SubgroupChar::Parabolic(psi)) => {
            let m = table.group().size();
            let gen = if *sub == Subgroup::P1 { DihedralElement::s(m) } else { DihedralElement::t(m) };
            let v = match psi {
                ParabolicChar::Trivial => rat(1),
                ParabolicChar::Psi => rat(-1),
            };
            vec![
                SubClass { size: 1, fused: DihedralElement::identity(m).class_key(), value: rat(1) },
                SubClass { size: 1, fused: gen.class_key(), value: v },
            ]
        }
        _ => return Err(mismatch()),
    })
}

/// Frobenius induction of `chi` from `sub` to the group of `table`, with its
/// decomposition into irreducibles.
pub fn induced_character(table: &CharacterTable, sub: &Subgroup, chi: &SubgroupChar) -> Result<InducedCharacter> {
    let group = *table.group();
    sub.check(&group)?;
    if let (Subgroup::Whole, SubgroupChar::Whole(label)) = (sub, chi) {
        let row = table.row(label).ok_or_else(|| Error::UnsupportedSubgroup(format!("{label} not in {group}")))?;
        let values = row.clone();
        let decomposition = table.decompose(&values)?;
        return Ok(InducedCharacter { values, decomposition });
    }
    let h_order = sub.order(&group);
    let field = table.field().clone();
    let mut sums: Vec<Rational> = vec![rat(0); table.classes().len()];
    for sc in sub_classes(sub, chi, table)? {
        let idx = table
            .class_index(&sc.fused)
            .ok_or_else(|| Error::UnsupportedSubgroup(format!("class {:?} not found", sc.fused)))?;
        sums[idx] += rat(sc.size as i64) * sc.value;
    }
    let values = ClassValues(
        table
            .classes()
            .iter()
            .zip(sums)
            .map(|((_, size), s)| {
                let factor = Rational::new((table.order() as i64).into(), ((h_order * size) as i64).into());
                field.from_rational(&(s * factor))
            })
            .collect(),
    );
    let decomposition = table.decompose(&values)?;
    Ok(InducedCharacter { values, decomposition })
}

/// Whether every irreducible character of `sub` induces to a reducible character of
/// `group`.
pub fn branching_reducibility_check(group: &CoxeterGroup, sub: &Subgroup) -> Result<bool> {
    let table = CharacterTable::of(group)?;
    for chi in sub.irreducible_chars(group)? {
        if induced_character(&table, sub, &chi)?.is_irreducible() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::DihedralChar;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn orthonormal_tables() {
        for n in 1..=5 {
            assert!(CharacterTable::of(&CoxeterGroup::A(n)).unwrap().is_orthonormal(), "S{n}");
        }
        for n in 1..=3 {
            assert!(CharacterTable::of(&CoxeterGroup::B(n)).unwrap().is_orthonormal(), "B{n}");
        }
        for m in 5..=9 {
            assert!(CharacterTable::of(&CoxeterGroup::I2(m)).unwrap().is_orthonormal(), "I2({m})");
        }
    }

    #[test]
    fn class_sizes_sum_to_order() {
        for g in [CoxeterGroup::A(5), CoxeterGroup::B(4), CoxeterGroup::I2(8)] {
            let t = CharacterTable::of(&g).unwrap();
            assert_eq!(t.classes().iter().map(|(_, s)| s).sum::<u64>(), t.order());
        }
    }

    #[test]
    fn dihedral_parabolic_inductions() {
        for m in [7, 8] {
            let g = CoxeterGroup::I2(m);
            let t = CharacterTable::of(&g).unwrap();
            let ind = induced_character(&t, &Subgroup::P1, &SubgroupChar::Parabolic(ParabolicChar::Trivial)).unwrap();
            let mut expected: BTreeMap<IrrLabel, u64> = BTreeMap::new();
            expected.insert(IrrLabel::Dihedral(DihedralChar::Trivial), 1);
            if m % 2 == 0 {
                expected.insert(IrrLabel::Dihedral(DihedralChar::Eps1), 1);
            }
            for i in 1..=DihedralChar::num_phi(m) {
                expected.insert(IrrLabel::Dihedral(DihedralChar::Phi(i)), 1);
            }
            assert_eq!(ind.decomposition, expected);
            let ind2 = induced_character(&t, &Subgroup::P2, &SubgroupChar::Parabolic(ParabolicChar::Psi)).unwrap();
            let mut expected2: BTreeMap<IrrLabel, u64> = BTreeMap::new();
            expected2.insert(IrrLabel::Dihedral(DihedralChar::Sign), 1);
            if m % 2 == 0 {
                expected2.insert(IrrLabel::Dihedral(DihedralChar::Eps1), 1);
            }
            for i in 1..=DihedralChar::num_phi(m) {
                expected2.insert(IrrLabel::Dihedral(DihedralChar::Phi(i)), 1);
            }
            assert_eq!(ind2.decomposition, expected2);
        }
    }

    #[test]
    fn branching_examples() {
        assert!(branching_reducibility_check(&CoxeterGroup::A(4), &Subgroup::Young(p(&[3, 1]))).unwrap());
        let s1_b2 = Subgroup::YoungTimesB { young: p(&[1]), b_rank: 2 };
        assert!(branching_reducibility_check(&CoxeterGroup::B(3), &s1_b2).unwrap());
        assert!(!branching_reducibility_check(&CoxeterGroup::B(3), &Subgroup::BProduct(2)).unwrap());
        assert!(!branching_reducibility_check(&CoxeterGroup::A(4), &Subgroup::Whole).unwrap());
        assert!(branching_reducibility_check(&CoxeterGroup::A(4), &Subgroup::BProduct(1)).is_err());
    }

    #[test]
    fn b_product_matches_lr_rule() {
        let g = CoxeterGroup::B(3);
        let t = CharacterTable::of(&g).unwrap();
        let a = Bipartition::from_parts(&[1], &[]).unwrap();
        let b = Bipartition::from_parts(&[1], &[1]).unwrap();
        let ind = induced_character(&t, &Subgroup::BProduct(1), &SubgroupChar::BProduct(a, b)).unwrap();
        let got: Vec<String> = ind.decomposition.keys().map(ToString::to_string).collect();
        let mut want = vec!["[1,1|1]".to_string(), "[2|1]".to_string()];
        want.sort();
        let mut got = got;
        got.sort();
        assert_eq!(got, want);
    }
}
