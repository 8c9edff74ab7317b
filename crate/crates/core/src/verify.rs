//! Verification suites: each criterion compares two independent routes over a grid.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{binomial, bipartitions, Bipartition, Partition};
use crate::cuspidal::{
    cuspidal_families, leaf_poset, rigid_closed_form, rigid_implies_cuspidal_check, rigid_modules, rigid_oracle,
    LeafIndex, RigidMode,
};
use crate::error::{Error, Result};
use crate::exactalg::{rat, ratio, CherednikParameter, CoxeterGroup, Rational};
use crate::families::dihedral::{a_value, dihedral_j_induction, parabolic_a_value, DihedralRegime};
use crate::families::{cm_families, lusztig_families, tau_twist, Family, Method};
use crate::fixtures::{self, expand_dihedral};
use crate::reps::characters::{branching_reducibility_check, CharacterTable, Subgroup};
use crate::reps::{
    build_b_rep, build_dihedral_rep, build_symmetric_rep, jucys_murphy_eigenvalue, DihedralChar, IrrLabel,
    ParabolicChar,
};
use crate::symbols::{cuspidal_family, cuspidal_k};

const MAX_REPORTED_FAILURES: usize = 20;

/// Which criteria to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Criterion(u8),
}

impl Suite {
    pub fn ids(&self) -> Vec<u8> {
        match self {
            Suite::All => (1..=9).collect(),
            Suite::Criterion(i) => vec![*i],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "all" => return Ok(Suite::All),
            "families" => 1,
            "cuspidal" => 2,
            "rigid" => 3,
            "dihedral-table1" => 4,
            "dihedral-table4" => 5,
            "leaves" => 6,
            "rigid-cuspidal" => 7,
            "structural" => 8,
            "symmetries" => 9,
            other => other.parse().map_err(|_| Error::Parse(format!("unknown suite `{other}`")))?,
        };
        if (1..=9).contains(&id) {
            Ok(Suite::Criterion(id))
        } else {
            Err(Error::Parse(format!("suite number {id} is outside 1..=9")))
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Suite::All => write!(f, "all"),
            Suite::Criterion(i) => write!(f, "{i}"),
        }
    }
}

/// Caps applied on top of the grid of each criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest rank used for types A, B and D.
    pub max_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 8 }
    }
}

/// Outcome of one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
    pub runtime_target_s: Option<u64>,
}

impl CriterionReport {
    pub fn within_runtime_target(&self) -> bool {
        self.runtime_target_s.map_or(true, |t| self.elapsed_ms < u128::from(t) * 1000)
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] criterion {}: {} ({} checks, {} ms)",
            self.id, self.title, self.checks, self.elapsed_ms
        )?;
        for line in &self.failures {
            write!(f, "\n    {line}")?;
        }
        Ok(())
    }
}

/// Collects check outcomes for one criterion.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    omitted: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.check_failed(what());
        }
    }

    fn result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.checks += other.checks;
        for f in other.failures {
            self.check_failed(f);
        }
        self.omitted += other.omitted;
    }

    fn check_failed(&mut self, f: String) {
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(f);
        } else {
            self.omitted += 1;
        }
    }
}

fn title(id: u8) -> &'static str {
    match id {
        1 => "Calogero-Moser families equal Lusztig families",
        2 => "cuspidal Calogero-Moser families equal cuspidal Lusztig families",
        3 => "rigid classification agrees with the rigidity equation on explicit matrices",
        4 => "dihedral families, rigid modules and cuspidal families from first principles",
        5 => "dihedral j-induction from induced characters and a-values",
        6 => "symplectic leaf posets",
        7 => "rigid modules lie in cuspidal families",
        8 => "representation and character table structure",
        9 => "tau twist and rescaling invariance",
        _ => "unknown",
    }
}

fn runtime_target(id: u8) -> Option<u64> {
    match id {
        1 => Some(60),
        3 | 8 => Some(120),
        _ => None,
    }
}

/// Runs the criteria of `suite` in parallel and returns the reports ordered by id.
pub fn run(suite: Suite, config: VerifyConfig) -> Vec<CriterionReport> {
    let mut reports: Vec<CriterionReport> = suite.ids().into_par_iter().map(|id| run_one(id, config)).collect();
    reports.sort_by_key(|r| r.id);
    reports
}

pub fn run_one(id: u8, config: VerifyConfig) -> CriterionReport {
    let start = Instant::now();
    let tally = match id {
        1 => families_equality(config),
        2 => cuspidal_equality(config),
        3 => rigid_against_oracle(config),
        4 => dihedral_table1(),
        5 => dihedral_table4(),
        6 => leaf_posets(config),
        7 => rigid_implies_cuspidal(config),
        8 => structural(config),
        9 => symmetries(config),
        _ => {
            let mut t = Tally::default();
            t.check(false, || format!("unknown criterion {id}"));
            t
        }
    };
    let mut failures = tally.failures;
    if tally.omitted > 0 {
        failures.push(format!("... and {} more failures", tally.omitted));
    }
    CriterionReport {
        id,
        title: title(id).to_string(),
        passed: failures.is_empty(),
        checks: tally.checks,
        failures,
        elapsed_ms: start.elapsed().as_millis(),
        runtime_target_s: runtime_target(id),
    }
}

fn bparam(c1: Rational, kappa: Rational) -> CherednikParameter {
    CherednikParameter::B { c1, kappa }
}

/// Type B parameters of the main grid.
fn b_parameters() -> Vec<CherednikParameter> {
    let mut out: Vec<CherednikParameter> = (0..=7).map(|m| bparam(rat(m), rat(1))).collect();
    out.push(bparam(rat(1), rat(0)));
    out.push(bparam(ratio(1, 2), rat(1)));
    out.push(bparam(rat(3), rat(2)));
    out
}

/// Nonnegative dihedral parameters: one sample per regime, skipping unequal
/// parameters for odd `m`.
fn dihedral_parameters(m: usize) -> Vec<CherednikParameter> {
    DihedralRegime::all()
        .iter()
        .map(|r| r.sample())
        .filter(|(a, b)| m % 2 == 0 || a == b)
        .map(|(a, b)| CherednikParameter::I2 { a, b })
        .collect()
}

/// The grid shared by the families, cuspidal and rigid-implies-cuspidal criteria.
fn main_grid(config: VerifyConfig) -> Vec<(CoxeterGroup, CherednikParameter)> {
    let n_max = config.max_n.min(8);
    let mut grid = Vec::new();
    for n in 1..=n_max {
        for p in b_parameters() {
            grid.push((CoxeterGroup::B(n), p));
        }
    }
    for n in 2..=n_max {
        grid.push((CoxeterGroup::D(n), CherednikParameter::D { kappa: rat(1) }));
    }
    for m in 5..=16 {
        for p in dihedral_parameters(m) {
            grid.push((CoxeterGroup::I2(m), p));
        }
    }
    for n in 2..=n_max {
        for c in [0, 1] {
            grid.push((CoxeterGroup::A(n), CherednikParameter::A { c: rat(c) }));
        }
    }
    grid
}

fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|x| {
            let mut t = Tally::default();
            f(x, &mut t);
            t
        })
        .collect();
    let mut total = Tally::default();
    for p in parts {
        total.absorb(p);
    }
    total
}

fn member_sets(fams: &[Family]) -> Vec<Vec<IrrLabel>> {
    fams.iter().map(|f| f.members().to_vec()).sorted().collect()
}

fn families_equality(config: VerifyConfig) -> Tally {
    par_tally(&main_grid(config), |(g, p), t| {
        let at = || format!("{g} at {p}");
        let (Some(cm), Some(lu)) = (t.result(cm_families(g, p), at), t.result(lusztig_families(g, p), at)) else {
            return;
        };
        t.check(cm.is_partition_of_irr() && lu.is_partition_of_irr(), || format!("{}: not a partition of Irr", at()));
        t.check(cm.same_blocks(&lu), || format!("{}: CM {:?} vs Lusztig {:?}", at(), cm.blocks(), lu.blocks()));
    })
}

fn bip_label(first: Partition, second: Partition) -> IrrLabel {
    IrrLabel::Bipartition(Bipartition::new(first, second))
}

fn cuspidal_equality(config: VerifyConfig) -> Tally {
    let mut t = par_tally(&main_grid(config), |(g, p), t| {
        let at = || format!("{g} at {p}");
        let Some(cm) = t.result(cuspidal_families(g, p, Method::CalogeroMoser), at) else { return };
        let Some(lu) = t.result(cuspidal_families(g, p, Method::Lusztig), at) else { return };
        t.check(member_sets(&cm) == member_sets(&lu), || {
            format!("{}: CM {:?} vs Lusztig {:?}", at(), member_sets(&cm), member_sets(&lu))
        });
        if let (CoxeterGroup::B(n), CherednikParameter::B { c1, kappa }) = (g, p) {
            if *kappa == rat(1) && c1.is_integer() {
                let m = c1.to_integer().try_into().expect("small m");
                let expected: Vec<Vec<IrrLabel>> = match cuspidal_k(*n, m) {
                    Some(k) => {
                        let fam = cuspidal_family(k as u32, m as u32);
                        let size = binomial((2 * k + m) as u64, k as u64) as usize;
                        t.check(fam.len() == size, || format!("{}: |F| = {} but C(2k+m,k) = {size}", at(), fam.len()));
                        vec![fam.into_iter().map(IrrLabel::Bipartition).collect()]
                    }
                    None => vec![],
                };
                t.check(member_sets(&cm) == expected, || {
                    format!("{}: cuspidal {:?} expected {:?}", at(), member_sets(&cm), expected)
                });
            }
        }
    });
    for (name, size) in [("fcusp-2-1", 10), ("fcusp-1-2", 4)] {
        let Some(f) = t.result(fixtures::load(name), || name.to_string()) else { continue };
        let p = &f.payload;
        let n = p["n"].as_u64().unwrap_or(0) as usize;
        let m = p["m"].as_i64().unwrap_or(0);
        let members: Vec<Bipartition> = serde_json::from_value(p["members"].clone()).unwrap_or_default();
        t.check(members.len() == size, || format!("{name}: {} members, expected {size}", members.len()));
        let expected: Vec<IrrLabel> = members.into_iter().map(IrrLabel::Bipartition).sorted().collect();
        for method in [Method::CalogeroMoser, Method::Lusztig] {
            let found = t.result(cuspidal_families(&CoxeterGroup::B(n), &bparam(rat(m), rat(1)), method), || {
                format!("{name} {method}")
            });
            if let Some(found) = found {
                t.check(member_sets(&found) == vec![expected.clone()], || format!("{name}: {method} disagrees"));
            }
        }
    }
    t
}

/// `{((k^{k+m}), ∅), (∅, ((k+m)^k))}` when `n = k(k+|m|)`, with components exchanged
/// for `m < 0`.
fn expected_rigid_b(n: usize, m: i64) -> Vec<IrrLabel> {
    let am = m.unsigned_abs() as usize;
    let Some(k) = (1..=n).find(|k| k * (k + am) == n) else {
        return vec![];
    };
    let tall = Partition::rectangle(k as u32, k + am);
    let wide = Partition::rectangle((k + am) as u32, k);
    let mut out = if m >= 0 {
        vec![bip_label(tall, Partition::empty()), bip_label(Partition::empty(), wide)]
    } else {
        vec![bip_label(Partition::empty(), tall), bip_label(wide, Partition::empty())]
    };
    out.sort();
    out
}

fn rigid_against_oracle(config: VerifyConfig) -> Tally {
    let n_max = config.max_n.min(5);
    let mut grid = Vec::new();
    for n in 1..=n_max {
        for m in -(n as i64 - 1)..=(n as i64 - 1) {
            grid.push((n, bparam(rat(m), rat(1)), Some(m)));
        }
        grid.push((n, bparam(ratio(1, 2), rat(1)), None));
        grid.push((n, bparam(rat(3), rat(2)), None));
    }
    par_tally(&grid, |(n, p, m), t| {
        let g = CoxeterGroup::B(*n);
        let at = || format!("{g} at {p}");
        let Some(oracle) = t.result(rigid_oracle(&g, p), at) else { return };
        let Some(closed) = t.result(rigid_closed_form(&g, p), at) else { return };
        let expected = m.map_or_else(Vec::new, |m| expected_rigid_b(*n, m));
        t.check(oracle == closed, || format!("{}: oracle {oracle:?} vs closed form {closed:?}", at()));
        t.check(closed == expected, || format!("{}: closed form {closed:?} expected {expected:?}", at()));
    })
}

fn dihedral_labels(chars: Vec<DihedralChar>) -> Vec<IrrLabel> {
    chars.into_iter().map(IrrLabel::Dihedral).collect()
}

fn token_list(v: &serde_json::Value) -> Vec<String> {
    serde_json::from_value(v.clone()).unwrap_or_default()
}

fn dihedral_table1() -> Tally {
    let mut t = Tally::default();
    let Some(f) = t.result(fixtures::load("dihedral-table1"), || "dihedral-table1".into()) else { return t };
    let rows: Vec<serde_json::Value> = f.payload["rows"].as_array().cloned().unwrap_or_default();
    t.check(rows.len() == 5, || format!("table has {} rows", rows.len()));
    let grid: Vec<(usize, usize)> =
        (5..=12).cartesian_product(0..rows.len()).filter(|&(m, i)| {
            let (a, b) = fixtures::table1_parameters(i);
            m % 2 == 0 || a == b
        }).collect();
    t.absorb(par_tally(&grid, |&(m, i), t| {
        let row = &rows[i];
        let (a, b) = fixtures::table1_parameters(i);
        let g = CoxeterGroup::I2(m);
        let p = CherednikParameter::I2 { a: rat(a), b: rat(b) };
        let at = || format!("{g} at {p} (row {})", i + 1);
        let expand = |key: &str| expand_dihedral(&token_list(&row[key]), m);
        let Some(rigid) = t.result(expand("rigid"), at) else { return };
        let Some(cusp) = t.result(expand("cuspidal"), at) else { return };
        let blocks: Option<Vec<Vec<IrrLabel>>> = row["cm_families"]
            .as_array()
            .map(|bs| {
                bs.iter()
                    .filter_map(|b| expand_dihedral(&token_list(b), m).ok())
                    .filter(|b| !b.is_empty())
                    .map(dihedral_labels)
                    .sorted()
                    .collect()
            });
        if let Some(fp) = t.result(cm_families(&g, &p), at) {
            let got: Vec<Vec<IrrLabel>> = fp.blocks().into_iter().sorted().collect();
            t.check(Some(&got) == blocks.as_ref(), || format!("{}: families {got:?}", at()));
        }
        if let Some(r) = t.result(rigid_oracle(&g, &p), at) {
            let expected = dihedral_labels(rigid.clone());
            t.check(r == expected, || format!("{}: rigid {r:?} expected {expected:?}", at()));
        }
        if let Some(c) = t.result(cuspidal_families(&g, &p, Method::CalogeroMoser), at) {
            let expected = vec![dihedral_labels(cusp.clone())];
            t.check(member_sets(&c) == expected, || format!("{}: cuspidal {:?}", at(), member_sets(&c)));
        }
    }));
    t
}

fn parabolic_entries() -> [(&'static str, Subgroup, &'static str, ParabolicChar); 4] {
    [
        ("P1", Subgroup::P1, "trivial", ParabolicChar::Trivial),
        ("P1", Subgroup::P1, "psi", ParabolicChar::Psi),
        ("P2", Subgroup::P2, "trivial", ParabolicChar::Trivial),
        ("P2", Subgroup::P2, "psi", ParabolicChar::Psi),
    ]
}

fn dihedral_table4() -> Tally {
    let mut t = Tally::default();
    let Some(table4) = t.result(fixtures::load("dihedral-table4"), || "dihedral-table4".into()) else { return t };
    let Some(table3) = t.result(fixtures::load("dihedral-table3"), || "dihedral-table3".into()) else { return t };
    let Some(para) = t.result(fixtures::load("dihedral-parabolic-a"), || "dihedral-parabolic-a".into()) else {
        return t;
    };
    let rows4: Vec<serde_json::Value> = table4.payload["rows"].as_array().cloned().unwrap_or_default();
    let rows3: Vec<serde_json::Value> = table3.payload["rows"].as_array().cloned().unwrap_or_default();
    let grid: Vec<(usize, DihedralRegime)> = (5..=16)
        .cartesian_product(DihedralRegime::all())
        .filter(|&(m, r)| m % 2 == 0 || r == DihedralRegime::Equal)
        .collect();
    t.absorb(par_tally(&grid, |&(m, regime), t| {
        let (a, b) = regime.sample();
        let at = || format!("I2({m}) regime {}", regime.name());
        let table3_row = match regime {
            DihedralRegime::Equal => 0,
            DihedralRegime::BAbovePositiveA | DihedralRegime::BAboveZeroA => 1,
            _ => 2,
        };
        let values = &rows3.get(table3_row).map(|r| r["values"].clone()).unwrap_or_default();
        for chi in DihedralChar::all(m) {
            let key = match chi {
                DihedralChar::Phi(_) => "phi".to_string(),
                other => other.to_string(),
            };
            let v = &values[&key];
            let coef = |k: &str| v[k].as_str().and_then(|s| crate::exactalg::parse_rational(s).ok()).unwrap_or_default();
            let mm = rat(m as i64);
            let expected = coef("a") * &a + coef("b") * &b + coef("ma") * &mm * &a + coef("mb") * &mm * &b;
            if let Some(got) = t.result(a_value(chi, m, &a, &b), at) {
                t.check(got == expected, || format!("{}: a({chi}) = {got}, table gives {expected}", at()));
            }
        }
        let Some(row) = rows4.iter().find(|r| r["parameters"].as_str().map(|s| s.replace(' ', "")) == Some(regime.name().into()))
        else {
            t.check(false, || format!("{}: missing table row", at()));
            return;
        };
        for (key, sub, field, chi) in parabolic_entries() {
            let expected_a = match para.payload[key][field].as_str() {
                Some("a") => a.clone(),
                Some("b") => b.clone(),
                _ => rat(0),
            };
            if let Some(pa) = t.result(parabolic_a_value(&sub, chi, &a, &b), at) {
                t.check(pa == expected_a, || format!("{}: a-value on {key} {field}", at()));
            }
            let expected: Option<BTreeMap<DihedralChar, u64>> = expand_dihedral(&token_list(&row[key][field]), m)
                .ok()
                .map(|v| v.into_iter().map(|d| (d, 1)).collect());
            if let Some(got) = t.result(dihedral_j_induction(m, &a, &b, &sub, chi), at) {
                t.check(Some(&got) == expected.as_ref(), || format!("{}: j({key} {field}) = {got:?}", at()));
            }
        }
    }));
    t
}

fn leaf_posets(config: VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let dims = |g: CoxeterGroup, p: CherednikParameter| -> Result<Vec<u64>> {
        leaf_poset(&g, &p)?.map(|l| l.dimensions()).ok_or_else(|| Error::Precondition("no leaf poset".into()))
    };
    if let Some(d) = t.result(dims(CoxeterGroup::B(6), bparam(rat(1), rat(1))), || "B6 at (1,1)".into()) {
        t.check(d == [0, 8, 12], || format!("B6 at (1,1): dims {d:?}"));
    }
    if let Some(d) = t.result(dims(CoxeterGroup::D(4), CherednikParameter::D { kappa: rat(1) }), || "D4".into()) {
        t.check(d == [0, 6], || format!("D4: dims {d:?}"));
    }
    let n_max = config.max_n.min(6);
    for n in 1..=n_max {
        if let Some(Some(poset)) = t.result(leaf_poset(&CoxeterGroup::B(n), &bparam(rat(1), rat(0))), || {
            format!("degenerate B{n}")
        }) {
            for leaf in poset.leaves() {
                let ok = matches!(&leaf.index, LeafIndex::Partition(l) if leaf.dimension == 2 * l.len() as u64);
                t.check(ok, || format!("degenerate B{n}: leaf {:?} has dim {}", leaf.index, leaf.dimension));
            }
        }
    }
    let grid: Vec<(CoxeterGroup, CherednikParameter)> = main_grid(config)
        .into_iter()
        .filter(|(g, _)| matches!(g, CoxeterGroup::B(_) | CoxeterGroup::D(_)))
        .collect();
    t.absorb(par_tally(&grid, |(g, p), t| {
        let at = || format!("{g} at {p}");
        let Some(Some(poset)) = t.result(leaf_poset(g, p), at) else { return };
        t.check(poset.is_antisymmetric(), || format!("{}: order is not antisymmetric", at()));
        t.check(poset.is_transitive(), || format!("{}: order is not transitive", at()));
        t.check(poset.refines_parabolic_order(), || format!("{}: order does not refine parabolic containment", at()));
        if let Some(c) = t.result(cuspidal_families(g, p, Method::CalogeroMoser), at) {
            let has_point = poset.point_leaf().is_some();
            t.check(has_point == !c.is_empty(), || {
                format!("{}: point leaf {has_point}, cuspidal families {}", at(), c.len())
            });
        }
    }));
    t
}

fn rigid_in_scale(g: &CoxeterGroup) -> bool {
    use crate::cuspidal::rigid::{ORACLE_MAX_DIHEDRAL, ORACLE_MAX_RANK_A, ORACLE_MAX_RANK_B};
    match *g {
        CoxeterGroup::A(n) => n <= ORACLE_MAX_RANK_A,
        CoxeterGroup::B(n) | CoxeterGroup::D(n) => n <= ORACLE_MAX_RANK_B,
        CoxeterGroup::I2(m) => m <= ORACLE_MAX_DIHEDRAL,
    }
}

fn rigid_implies_cuspidal(config: VerifyConfig) -> Tally {
    par_tally(&main_grid(config), |(g, p), t| {
        let at = || format!("{g} at {p}");
        let mut modes = vec![RigidMode::Closed];
        if rigid_in_scale(g) {
            modes.push(RigidMode::Oracle);
        }
        for mode in modes {
            if let Some(ok) = t.result(rigid_implies_cuspidal_check(g, p, mode), at) {
                t.check(ok, || format!("{}: a {mode} rigid label lies outside the cuspidal families", at()));
            }
        }
    })
}

fn structural(config: VerifyConfig) -> Tally {
    let mut groups: Vec<CoxeterGroup> = (2..=config.max_n.min(5)).map(CoxeterGroup::A).collect();
    groups.extend((1..=config.max_n.min(4)).map(CoxeterGroup::B));
    groups.extend((5..=16).map(CoxeterGroup::I2));
    let mut t = par_tally(&groups, |g, t| {
        let at = || g.to_string();
        let relations: Result<bool> = match *g {
            CoxeterGroup::A(n) => crate::combinatorics::partitions(n)
                .iter()
                .map(|l| build_symmetric_rep(l).satisfies_coxeter_relations())
                .fold_ok(true, |a, b| a && b),
            CoxeterGroup::B(n) => bipartitions(n)
                .iter()
                .map(|bp| build_b_rep(bp).satisfies_coxeter_relations())
                .fold_ok(true, |a, b| a && b),
            CoxeterGroup::I2(m) => DihedralChar::all(m)
                .into_iter()
                .map(|chi| build_dihedral_rep(chi, m)?.satisfies_coxeter_relations())
                .fold_ok(true, |a, b| a && b),
            CoxeterGroup::D(_) => Ok(true),
        };
        if let Some(ok) = t.result(relations, at) {
            t.check(ok, || format!("{}: Coxeter relations fail", at()));
        }
        if let Some(table) = t.result(CharacterTable::of(g), at) {
            t.check(table.is_orthonormal(), || format!("{}: character table is not orthonormal", at()));
        }
    });
    let mut branching = Vec::new();
    for n in [4, 5] {
        for k in 1..n {
            let parts = vec![(n - k).max(k) as u32, (n - k).min(k) as u32];
            branching.push((CoxeterGroup::A(n), Subgroup::Young(Partition::new(parts).expect("valid parts"))));
        }
    }
    for n in [3, 4] {
        for i in 1..=n {
            let young = Partition::new(vec![i as u32]).expect("valid parts");
            branching.push((CoxeterGroup::B(n), Subgroup::YoungTimesB { young, b_rank: n - i }));
        }
    }
    t.absorb(par_tally(&branching, |(g, sub), t| {
        if let Some(ok) = t.result(branching_reducibility_check(g, sub), || format!("{g} {sub:?}")) {
            t.check(ok, || format!("{g}: some character of {sub:?} induces irreducibly"));
        }
    }));
    for l in 1..=6u32 {
        for b in 1..=6usize {
            if l as usize * b <= 6 {
                let lam = Partition::rectangle(l, b);
                let got = jucys_murphy_eigenvalue(&lam);
                t.check(got == Some(l as i64 - b as i64), || format!("JM eigenvalue on {lam} is {got:?}"));
            }
        }
    }
    t
}

fn swapped_labels(labels: &[IrrLabel]) -> Vec<IrrLabel> {
    labels
        .iter()
        .map(|l| match l {
            IrrLabel::Bipartition(bp) => IrrLabel::Bipartition(bp.swapped()),
            other => other.clone(),
        })
        .sorted()
        .collect()
}

fn symmetries(config: VerifyConfig) -> Tally {
    let n_max = config.max_n.min(6);
    let mut twist_grid = Vec::new();
    for n in 1..=n_max {
        for c1 in -4..=4 {
            for kappa in [0, 1, 2] {
                twist_grid.push((n, bparam(rat(c1), rat(kappa))));
            }
        }
        twist_grid.push((n, bparam(ratio(1, 2), rat(1))));
        twist_grid.push((n, bparam(ratio(-3, 2), rat(1))));
    }
    let mut t = par_tally(&twist_grid, |(n, p), t| {
        let g = CoxeterGroup::B(*n);
        let CherednikParameter::B { c1, kappa } = p else { return };
        let q = bparam(-c1.clone(), kappa.clone());
        let at = || format!("{g} at {p}");
        let (Some(cm), Some(cm_neg)) = (t.result(cm_families(&g, p), at), t.result(cm_families(&g, &q), at)) else {
            return;
        };
        if let Some(tw) = t.result(tau_twist(&cm), at) {
            t.check(tw.same_blocks(&cm_neg), || format!("{}: tau twist of CM families", at()));
        }
        if p.is_nonnegative() {
            if let Some(lu) = t.result(lusztig_families(&g, p), at) {
                if let Some(tw) = t.result(tau_twist(&lu), at) {
                    t.check(tw.same_blocks(&cm_neg), || format!("{}: tau twist of Lusztig families", at()));
                }
            }
        }
        for mode in [RigidMode::Closed, RigidMode::Oracle] {
            if mode == RigidMode::Oracle && !rigid_in_scale(&g) {
                continue;
            }
            let (Some(r), Some(r_neg)) = (t.result(rigid_modules(&g, p, mode), at), t.result(rigid_modules(&g, &q, mode), at))
            else {
                continue;
            };
            t.check(swapped_labels(&r) == r_neg, || format!("{}: {mode} rigid labels under tau", at()));
        }
        let (Some(c), Some(c_neg)) = (
            t.result(cuspidal_families(&g, p, Method::CalogeroMoser), at),
            t.result(cuspidal_families(&g, &q, Method::CalogeroMoser), at),
        ) else {
            return;
        };
        let twisted: Vec<Vec<IrrLabel>> = c.iter().map(|f| swapped_labels(f.members())).sorted().collect();
        t.check(twisted == member_sets(&c_neg), || format!("{}: cuspidal families under tau", at()));
    });
    let mut scale_grid: Vec<(CoxeterGroup, CherednikParameter)> = main_grid(config)
        .into_iter()
        .filter(|(g, _)| match *g {
            CoxeterGroup::A(n) | CoxeterGroup::B(n) | CoxeterGroup::D(n) => n <= n_max,
            CoxeterGroup::I2(m) => m <= 12,
        })
        .collect();
    for n in 1..=n_max {
        scale_grid.push((CoxeterGroup::B(n), bparam(rat(-2), rat(1))));
    }
    t.absorb(par_tally(&scale_grid, |(g, p), t| {
        for alpha in [rat(2), ratio(1, 3)] {
            let q = p.scaled(&alpha);
            let at = || format!("{g} at {p} scaled by {alpha}");
            if let (Some(x), Some(y)) = (t.result(cm_families(g, p), at), t.result(cm_families(g, &q), at)) {
                t.check(x.same_blocks(&y), || format!("{}: CM families change", at()));
            }
            if p.is_nonnegative() {
                if let (Some(x), Some(y)) = (t.result(lusztig_families(g, p), at), t.result(lusztig_families(g, &q), at)) {
                    t.check(x.same_blocks(&y), || format!("{}: Lusztig families change", at()));
                }
            }
        }
    }));
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_parsing() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert_eq!("3".parse::<Suite>().unwrap(), Suite::Criterion(3));
        assert_eq!("symmetries".parse::<Suite>().unwrap(), Suite::Criterion(9));
        assert!("0".parse::<Suite>().is_err());
        assert!("ten".parse::<Suite>().is_err());
        assert_eq!(Suite::All.ids().len(), 9);
    }

    #[test]
    fn expected_rigid_b_examples() {
        assert_eq!(expected_rigid_b(4, 0).len(), 2);
        assert_eq!(expected_rigid_b(3, -2), swapped_labels(&expected_rigid_b(3, 2)));
        assert!(expected_rigid_b(5, 1).is_empty());
    }

    #[test]
    fn tally_caps_failures() {
        let mut t = Tally::default();
        for i in 0..30 {
            t.check(false, || format!("f{i}"));
        }
        assert_eq!(t.checks, 30);
        assert_eq!(t.failures.len(), MAX_REPORTED_FAILURES);
        assert_eq!(t.omitted, 10);
    }

    #[test]
    fn small_grid_passes() {
        for report in run(Suite::All, VerifyConfig { max_n: 3 }) {
            assert!(report.passed, "{report}");
        }
    }
}
