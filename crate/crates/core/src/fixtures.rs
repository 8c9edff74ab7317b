//! Reference data transcribed from published tables, bundled with the crate.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::reps::DihedralChar;

/// A transcribed table or worked example.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    /// Where the data comes from, described neutrally.
    pub source: String,
    /// A short locator for the transcribed object.
    pub anchor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub payload: Value,
}

const FIXTURES: &[(&str, &str)] = &[
    ("dihedral-table1", include_str!("../fixtures/dihedral-table1.json")),
    ("dihedral-table2", include_str!("../fixtures/dihedral-table2.json")),
    ("dihedral-table3", include_str!("../fixtures/dihedral-table3.json")),
    ("dihedral-parabolic-a", include_str!("../fixtures/dihedral-parabolic-a.json")),
    ("dihedral-table4", include_str!("../fixtures/dihedral-table4.json")),
    ("dihedral-induction", include_str!("../fixtures/dihedral-induction.json")),
    ("fcusp-2-1", include_str!("../fixtures/fcusp-2-1.json")),
    ("fcusp-1-2", include_str!("../fixtures/fcusp-1-2.json")),
    ("symbol-example-411", include_str!("../fixtures/symbol-example-411.json")),
    ("symbol-bar-example", include_str!("../fixtures/symbol-bar-example.json")),
    ("typeD-cuspidal-symbols", include_str!("../fixtures/typeD-cuspidal-symbols.json")),
];

pub fn names() -> Vec<&'static str> {
    FIXTURES.iter().map(|(n, _)| *n).collect()
}

pub fn load(name: &str) -> Result<Fixture> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture {name}: {e}")))
}

pub fn all() -> Result<Vec<Fixture>> {
    names().into_iter().map(load).collect()
}

/// Expands the shorthand used in the dihedral tables into characters of `I₂(m)`.
///
/// `F` is every two-dimensional character, `R` is `F` without `φ₁` and, for even
/// `m`, without `φ_{(m−2)/2}`, and `phi_|F|` is the last two-dimensional character.
/// `eps1` and `eps2` are dropped for odd `m`.
pub fn expand_dihedral(tokens: &[String], m: usize) -> Result<Vec<DihedralChar>> {
    let k = DihedralChar::num_phi(m);
    let mut out = Vec::new();
    for t in tokens {
        match t.as_str() {
            "F" => out.extend((1..=k).map(DihedralChar::Phi)),
            "R" => out.extend(
                (1..=k)
                    .filter(|&i| i != 1 && !(m % 2 == 0 && i == (m - 2) / 2))
                    .map(DihedralChar::Phi),
            ),
            "phi_|F|" => out.push(DihedralChar::Phi(k)),
            other => {
                let d: DihedralChar = other.parse()?;
                if d.exists_for(m) {
                    out.push(d);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A sample `(a, b)` for each row of `dihedral-table1`, with `b` on the class of `s`.
///
/// Rows 2 and 3 of that table put `a` on `s`, so they are read with the parameters
/// exchanged.
pub fn table1_parameters(row: usize) -> (i64, i64) {
    match row {
        0 => (1, 2),
        1 => (1, 0),
        2 => (0, 1),
        3 => (1, 1),
        _ => (1, -1),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use itertools::Itertools;
    use num::Zero;

    use super::*;
    use crate::combinatorics::{Bipartition, Partition, UnorderedBipartition};
    use crate::cuspidal::{cuspidal_families, rigid_closed_form, rigid_oracle};
    use crate::exactalg::{parse_rational, rat, CherednikParameter, CoxeterGroup, Rational};
    use crate::families::dihedral::{a_value, dihedral_j_induction, parabolic_a_value, DihedralRegime};
    use crate::families::{cm_families, lusztig_families, Method};
    use crate::reps::characters::{Subgroup, SubgroupChar};
    use crate::reps::{build_dihedral_table, induced_character, IrrLabel, ParabolicChar};
    use crate::symbols::{cuspidal_family, symbol_of, BSymbol};

    fn strings(v: &Value) -> Vec<String> {
        serde_json::from_value(v.clone()).unwrap()
    }

    fn blocks_of(v: &Value, m: usize) -> Vec<Vec<IrrLabel>> {
        let raw: Vec<Vec<String>> = serde_json::from_value(v.clone()).unwrap();
        raw.iter()
            .map(|b| expand_dihedral(b, m).unwrap().into_iter().map(IrrLabel::Dihedral).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .sorted()
            .collect()
    }

    fn labels(v: Vec<DihedralChar>) -> Vec<IrrLabel> {
        v.into_iter().map(IrrLabel::Dihedral).collect()
    }

    fn i2(a: i64, b: i64) -> CherednikParameter {
        CherednikParameter::I2 { a: rat(a), b: rat(b) }
    }

    fn sorted_blocks(blocks: Vec<Vec<IrrLabel>>) -> Vec<Vec<IrrLabel>> {
        blocks.into_iter().sorted().collect()
    }

    #[test]
    fn every_fixture_loads_and_round_trips() {
        for name in names() {
            let f = load(name).unwrap();
            assert_eq!(f.name, name);
            assert!(!f.source.is_empty() && !f.anchor.is_empty());
            let back: Fixture = serde_json::from_value(serde_json::to_value(&f).unwrap()).unwrap();
            assert_eq!(back, f);
        }
        assert_eq!(all().unwrap().len(), names().len());
        assert_eq!(load("nope"), Err(Error::UnknownFixture("nope".into())));
    }

    #[test]
    fn shorthand_expansion() {
        let t = |s: &[&str]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(expand_dihedral(&t(&["R"]), 6).unwrap(), vec![]);
        assert_eq!(expand_dihedral(&t(&["R"]), 8).unwrap(), vec![DihedralChar::Phi(2)]);
        assert_eq!(expand_dihedral(&t(&["R"]), 7).unwrap(), vec![DihedralChar::Phi(2), DihedralChar::Phi(3)]);
        assert_eq!(expand_dihedral(&t(&["eps1", "phi_|F|"]), 5).unwrap(), vec![DihedralChar::Phi(2)]);
        assert!(expand_dihedral(&t(&["bogus"]), 5).is_err());
    }

    #[test]
    fn dihedral_table1_matches_computation() {
        let f = load("dihedral-table1").unwrap();
        let rows = f.payload["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 5);
        for m in 5..=12 {
            for (i, row) in rows.iter().enumerate() {
                let (a, b) = table1_parameters(i);
                if m % 2 == 1 && a != b {
                    continue;
                }
                let g = CoxeterGroup::I2(m);
                let p = i2(a, b);
                let fams = cm_families(&g, &p).unwrap();
                assert_eq!(sorted_blocks(fams.blocks()), blocks_of(&row["cm_families"], m), "m={m} row {i}");
                let rigid = labels(expand_dihedral(&strings(&row["rigid"]), m).unwrap());
                assert_eq!(rigid_closed_form(&g, &p).unwrap(), rigid, "m={m} row {i}");
                if m <= 10 {
                    assert_eq!(rigid_oracle(&g, &p).unwrap(), rigid, "m={m} row {i}");
                }
                let cusp = labels(expand_dihedral(&strings(&row["cuspidal"]), m).unwrap());
                let found = cuspidal_families(&g, &p, Method::CalogeroMoser).unwrap();
                assert_eq!(found.len(), 1);
                assert_eq!(found[0].members(), cusp.as_slice(), "m={m} row {i}");
            }
        }
    }

    #[test]
    fn dihedral_table2_matches_computation() {
        let f = load("dihedral-table2").unwrap();
        let rows = f.payload["rows"].as_array().unwrap();
        let regimes: [&[DihedralRegime]; 4] = [
            &[DihedralRegime::Equal],
            &[DihedralRegime::BAbovePositiveA, DihedralRegime::AAbovePositiveB],
            &[DihedralRegime::BAboveZeroA],
            &[DihedralRegime::AAboveZeroB],
        ];
        for m in 5..=12 {
            for (row, rs) in rows.iter().zip(regimes) {
                for r in rs {
                    let (a, b) = r.sample();
                    if m % 2 == 1 && a != b {
                        continue;
                    }
                    let fams = lusztig_families(&CoxeterGroup::I2(m), &CherednikParameter::I2 { a, b }).unwrap();
                    assert_eq!(sorted_blocks(fams.blocks()), blocks_of(&row["families"], m), "m={m} {}", r.name());
                }
            }
        }
    }

    fn linear_form(v: &Value, m: usize, a: &Rational, b: &Rational) -> Rational {
        let c = |k: &str| parse_rational(v[k].as_str().unwrap()).unwrap();
        let mm = rat(m as i64);
        c("a") * a + c("b") * b + c("ma") * &mm * a + c("mb") * &mm * b
    }

    #[test]
    fn dihedral_table3_matches_computation() {
        let f = load("dihedral-table3").unwrap();
        let rows = f.payload["rows"].as_array().unwrap();
        let samples: [&[(i64, i64)]; 3] = [&[(1, 1), (3, 3)], &[(1, 2), (0, 1), (2, 5)], &[(2, 1), (1, 0), (5, 2)]];
        for m in 5..=12 {
            for (row, pts) in rows.iter().zip(samples) {
                for &(a, b) in pts {
                    if m % 2 == 1 && a != b {
                        continue;
                    }
                    let (a, b) = (rat(a), rat(b));
                    for chi in DihedralChar::all(m) {
                        let key = match chi {
                            DihedralChar::Phi(_) => "phi".to_string(),
                            other => other.to_string(),
                        };
                        let expected = linear_form(&row["values"][&key], m, &a, &b);
                        assert_eq!(a_value(chi, m, &a, &b).unwrap(), expected, "m={m} a={a} b={b} {chi}");
                    }
                }
            }
        }
    }

    #[test]
    fn dihedral_parabolic_a_matches_computation() {
        let f = load("dihedral-parabolic-a").unwrap();
        let (a, b) = (rat(2), rat(3));
        for (key, sub) in [("P1", Subgroup::P1), ("P2", Subgroup::P2)] {
            for (field, chi) in [("trivial", ParabolicChar::Trivial), ("psi", ParabolicChar::Psi)] {
                let expected = match f.payload[key][field].as_str().unwrap() {
                    "a" => a.clone(),
                    "b" => b.clone(),
                    "0" => Rational::zero(),
                    other => panic!("unexpected entry {other}"),
                };
                assert_eq!(parabolic_a_value(&sub, chi, &a, &b).unwrap(), expected);
            }
        }
    }

    fn sum_of(tokens: &[String], m: usize) -> BTreeMap<DihedralChar, u64> {
        expand_dihedral(tokens, m).unwrap().into_iter().map(|d| (d, 1)).collect()
    }

    #[test]
    fn dihedral_table4_matches_computation() {
        let f = load("dihedral-table4").unwrap();
        let rows = f.payload["rows"].as_array().unwrap();
        let regimes = [
            DihedralRegime::Equal,
            DihedralRegime::BAbovePositiveA,
            DihedralRegime::BAboveZeroA,
            DihedralRegime::AAbovePositiveB,
            DihedralRegime::AAboveZeroB,
        ];
        for m in 5..=12 {
            for (row, r) in rows.iter().zip(regimes) {
                assert_eq!(row["parameters"].as_str().unwrap().replace(' ', ""), r.name());
                let (a, b) = r.sample();
                if m % 2 == 1 && a != b {
                    continue;
                }
                for (key, sub) in [("P1", Subgroup::P1), ("P2", Subgroup::P2)] {
                    for (field, chi) in [("trivial", ParabolicChar::Trivial), ("psi", ParabolicChar::Psi)] {
                        let expected = sum_of(&strings(&row[key][field]), m);
                        let got = dihedral_j_induction(m, &a, &b, &sub, chi).unwrap();
                        assert_eq!(got, expected, "m={m} {} {key} {field}", r.name());
                    }
                }
            }
        }
    }

    #[test]
    fn dihedral_induction_without_delta_term() {
        let f = load("dihedral-induction").unwrap();
        for m in 5..=12 {
            let table = build_dihedral_table(m).unwrap();
            for (key, sub) in [("P1", Subgroup::P1), ("P2", Subgroup::P2)] {
                for (field, chi) in [("trivial", ParabolicChar::Trivial), ("psi", ParabolicChar::Psi)] {
                    let ind = induced_character(&table, &sub, &SubgroupChar::Parabolic(chi)).unwrap();
                    let got: BTreeMap<DihedralChar, u64> =
                        ind.decomposition.iter().map(|(l, &c)| (l.as_dihedral().unwrap(), c)).collect();
                    let expected = sum_of(&strings(&f.payload[key][field]), m);
                    assert_eq!(got, expected, "m={m} {key} {field}");
                    let dim: usize = got.iter().map(|(d, &c)| d.dim() * c as usize).sum();
                    assert_eq!(dim, m);
                }
            }
        }
    }

    fn bipartitions_of(v: &Value) -> Vec<Bipartition> {
        serde_json::from_value(v.clone()).unwrap()
    }

    #[test]
    fn fcusp_fixtures_match_computation() {
        for name in ["fcusp-2-1", "fcusp-1-2"] {
            let f = load(name).unwrap();
            let p = &f.payload;
            let (n, k, m) = (p["n"].as_u64().unwrap() as usize, p["k"].as_u64().unwrap() as u32, p["m"].as_u64().unwrap());
            let members = bipartitions_of(&p["members"]);
            assert_eq!(serde_json::to_value(&members).unwrap(), p["members"]);
            let sorted: Vec<Bipartition> = members.iter().cloned().sorted().collect();
            assert_eq!(cuspidal_family(k, m as u32), sorted);
            let labels: Vec<IrrLabel> = sorted.into_iter().map(IrrLabel::Bipartition).collect();
            let param = CherednikParameter::B { c1: rat(m as i64), kappa: rat(1) };
            for method in [Method::CalogeroMoser, Method::Lusztig] {
                let found = cuspidal_families(&CoxeterGroup::B(n), &param, method).unwrap();
                assert_eq!(found.len(), 1);
                assert_eq!(found[0].members(), labels.as_slice(), "{name} {method}");
            }
        }
    }

    fn symbol(v: &Value) -> BSymbol {
        BSymbol::integral(serde_json::from_value(v["beta"].clone()).unwrap(), serde_json::from_value(v["gamma"].clone()).unwrap())
            .unwrap()
    }

    fn rows_match(s: &BSymbol, v: &Value) {
        let js = s.to_json();
        assert_eq!(js["beta"], v["beta"]);
        assert_eq!(js["gamma"], v["gamma"]);
    }

    #[test]
    fn worked_symbol_matches_computation() {
        let f = load("symbol-example-411").unwrap();
        let p = &f.payload;
        let bp: Bipartition = serde_json::from_value(p["bipartition"].clone()).unwrap();
        assert_eq!(serde_json::to_value(&bp).unwrap(), p["bipartition"]);
        let c1 = parse_rational(p["c1"].as_str().unwrap()).unwrap();
        let kappa = parse_rational(p["kappa"].as_str().unwrap()).unwrap();
        assert_eq!(bp.size() as u64, p["n"].as_u64().unwrap());
        let s = symbol_of(&bp, p["N"].as_u64().unwrap() as usize, &c1, &kappa).unwrap();
        rows_match(&s, &p["symbol"]);
        assert_eq!(s.bipartition(), bp);
        let shift = p["shift"].as_u64().unwrap() as usize;
        let base = s.unshift(shift).unwrap();
        rows_match(&base, &p["unshifted"]);
        assert_eq!(base.shift(shift), s);
        assert!(base.unshift(1).is_none());
    }

    #[test]
    fn worked_bar_matches_computation() {
        let f = load("symbol-bar-example").unwrap();
        let p = &f.payload;
        let s = symbol(&p["symbol"]);
        let bar = s.bar(Some(p["t"].as_i64().unwrap())).unwrap();
        rows_match(&bar, &p["bar"]);
        let bp: Bipartition = serde_json::from_value(p["bar_bipartition"].clone()).unwrap();
        assert_eq!(bar.bipartition(), bp);
        assert_eq!(s.bipartition().sign_twist(), bp);
    }

    #[test]
    fn type_d_symbols_match_computation() {
        let f = load("typeD-cuspidal-symbols").unwrap();
        for case in f.payload["cases"].as_array().unwrap() {
            let k = case["k"].as_u64().unwrap() as usize;
            let n = case["n"].as_u64().unwrap() as usize;
            assert_eq!(n, k * k);
            let alt = symbol(&case["alternating"]);
            let square = symbol(&case["square"]);
            let bp: Bipartition = serde_json::from_value(case["square_bipartition"].clone()).unwrap();
            assert_eq!(bp, Bipartition::new(Partition::rectangle(k as u32, k), Partition::empty()));
            rows_match(&symbol_of(&bp, k, &rat(0), &rat(1)).unwrap(), &case["square"]);
            for s in [&alt, &square] {
                let c = s.content();
                assert_eq!(c.total(), 2 * k);
                assert!((0..2 * k as i64).all(|i| c.count(i) == 1));
            }
            let found = cuspidal_families(&CoxeterGroup::D(n), &CherednikParameter::D { kappa: rat(1) }, Method::Lusztig).unwrap();
            assert_eq!(found.len(), 1);
            for s in [&alt, &square] {
                let u = UnorderedBipartition::from_bipartition(&s.bipartition()).unwrap();
                assert!(found[0].contains(&IrrLabel::Unordered(u)));
            }
        }
    }
}
