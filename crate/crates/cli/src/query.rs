//! Flag validation and dispatch into the library.

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, ValueEnum};
use cuspfam::combinatorics::{bipartitions, Bipartition, Partition};
use cuspfam::cuspidal::{cuspidal_of, marked_families};
use cuspfam::exactalg::{parse_rational, rat, CherednikParameter, CoxeterGroup, Rational};
use cuspfam::families::{singleton_partition, tau_twist, Family, FamilyPartition, Method};
use cuspfam::symbols::{symbol_of, BSymbol};

use crate::MethodArg;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeTag {
    A,
    B,
    D,
    I2,
}

/// The group and parameter flags shared by every query subcommand.
#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Coxeter type
    #[arg(long = "type", value_enum, ignore_case = true)]
    pub type_tag: TypeTag,

    /// Rank (types B, D) or number of letters (type A)
    #[arg(long)]
    pub n: Option<usize>,

    /// Order of the rotation subgroup of I2(m)
    #[arg(long)]
    pub m: Option<usize>,

    /// Type A parameter
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,

    /// Type B parameter on the sign changes
    #[arg(long, allow_hyphen_values = true)]
    pub c1: Option<String>,

    /// Type B and D parameter on the remaining reflections
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,

    /// I2(m) parameter on the class of t
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,

    /// I2(m) parameter on the class of s
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

fn rational(flag: &str, value: &Option<String>) -> Result<Rational> {
    let text = value.as_deref().with_context(|| format!("--{flag} is required for this type"))?;
    parse_rational(text).with_context(|| format!("--{flag} must be a rational \"p/q\""))
}

impl GroupArgs {
    fn reject_foreign(&self, allowed: &[&str]) -> Result<()> {
        let given = [
            ("n", self.n.is_some()),
            ("m", self.m.is_some()),
            ("c", self.c.is_some()),
            ("c1", self.c1.is_some()),
            ("kappa", self.kappa.is_some()),
            ("a", self.a.is_some()),
            ("b", self.b.is_some()),
        ];
        for (flag, present) in given {
            if present && !allowed.contains(&flag) {
                bail!("--{flag} does not apply to type {:?}", self.type_tag);
            }
        }
        Ok(())
    }

    fn group(&self) -> Result<CoxeterGroup> {
        let group = match self.type_tag {
            TypeTag::A => CoxeterGroup::A(self.n.context("--n is required for type A")?),
            TypeTag::B => CoxeterGroup::B(self.n.context("--n is required for type B")?),
            TypeTag::D => CoxeterGroup::D(self.n.context("--n is required for type D")?),
            TypeTag::I2 => CoxeterGroup::I2(self.m.context("--m is required for type I2")?),
        };
        group.validate()?;
        Ok(group)
    }

    /// The validated group and parameter.
    pub fn resolve(&self) -> Result<(CoxeterGroup, CherednikParameter)> {
        let param = match self.type_tag {
            TypeTag::A => {
                self.reject_foreign(&["n", "c"])?;
                CherednikParameter::A { c: rational("c", &self.c)? }
            }
            TypeTag::B => {
                self.reject_foreign(&["n", "c1", "kappa"])?;
                CherednikParameter::B { c1: rational("c1", &self.c1)?, kappa: rational("kappa", &self.kappa)? }
            }
            TypeTag::D => {
                self.reject_foreign(&["n", "kappa"])?;
                CherednikParameter::D { kappa: rational("kappa", &self.kappa)? }
            }
            TypeTag::I2 => {
                self.reject_foreign(&["m", "a", "b"])?;
                CherednikParameter::I2 { a: rational("a", &self.a)?, b: rational("b", &self.b)? }
            }
        };
        let group = self.group()?;
        param.validate_for(&group)?;
        Ok((group, param))
    }

    /// The group with a placeholder parameter, for the irrational type B regime.
    pub fn resolve_generic(&self) -> Result<(CoxeterGroup, CherednikParameter)> {
        ensure!(self.type_tag == TypeTag::B, "--generic applies to type B only");
        self.reject_foreign(&["n"])?;
        Ok((self.group()?, CherednikParameter::B { c1: rat(1), kappa: rat(0) }))
    }
}

pub struct FamiliesOutput {
    pub partitions: Vec<FamilyPartition>,
    pub generic: bool,
}

impl FamiliesOutput {
    pub fn equal(&self) -> Option<bool> {
        match self.partitions.as_slice() {
            [x, y] => Some(x.same_blocks(y)),
            _ => None,
        }
    }
}

fn methods(arg: MethodArg) -> Vec<Method> {
    match arg {
        MethodArg::Cm => vec![Method::CalogeroMoser],
        MethodArg::Lusztig => vec![Method::Lusztig],
        MethodArg::Both => vec![Method::CalogeroMoser, Method::Lusztig],
    }
}

/// Families with cuspidal marks. Lusztig families at negative `c₁` are obtained from
/// `|c₁|` by exchanging the components of every label.
fn marked(group: &CoxeterGroup, param: &CherednikParameter, method: Method) -> Result<FamilyPartition> {
    if let (Method::Lusztig, CherednikParameter::B { c1, kappa }) = (method, param) {
        if *c1 < rat(0) && *kappa >= rat(0) {
            let positive = CherednikParameter::B { c1: -c1.clone(), kappa: kappa.clone() };
            return Ok(tau_twist(&marked_families(group, &positive, method)?)?);
        }
    }
    Ok(marked_families(group, param, method)?)
}

pub fn families(
    group: &CoxeterGroup,
    param: &CherednikParameter,
    method: MethodArg,
    generic: bool,
) -> Result<FamiliesOutput> {
    let partitions = methods(method)
        .into_iter()
        .map(|m| if generic { Ok(singleton_partition(group, param, m)?) } else { marked(group, param, m) })
        .collect::<Result<Vec<_>>>()?;
    Ok(FamiliesOutput { partitions, generic })
}

pub fn cuspidal(
    group: &CoxeterGroup,
    param: &CherednikParameter,
    method: MethodArg,
) -> Result<Vec<(Method, Vec<Family>)>> {
    methods(method).into_iter().map(|m| Ok((m, cuspidal_of(&marked(group, param, m)?)))).collect()
}

/// Parses a bipartition written as "[2,1|1]", "2,1|1" or "[|3]".
pub fn parse_bipartition(text: &str) -> Result<Bipartition> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let (first, second) = inner.split_once('|').context("a bipartition is written as \"[2,1|1]\"")?;
    let parts = |s: &str| -> Result<Partition> {
        let v = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<u32>().with_context(|| format!("`{p}` is not a part")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(v)?)
    };
    Ok(Bipartition::new(parts(first)?, parts(second)?))
}

pub fn symbols(
    group: &CoxeterGroup,
    param: &CherednikParameter,
    big_n: Option<usize>,
    label: Option<&str>,
) -> Result<Vec<(Bipartition, BSymbol)>> {
    let (CoxeterGroup::B(n), CherednikParameter::B { c1, kappa }) = (group, param) else {
        bail!("symbols are defined for type B");
    };
    let big_n = big_n.unwrap_or((*n).max(1));
    let labels = match label {
        Some(text) => {
            let bp = parse_bipartition(text)?;
            ensure!(bp.size() == *n, "{bp} is not a bipartition of {n}");
            vec![bp]
        }
        None => bipartitions(*n),
    };
    labels
        .into_iter()
        .map(|bp| {
            let s = symbol_of(&bp, big_n, c1, kappa)?;
            Ok((bp, s))
        })
        .collect()
}
