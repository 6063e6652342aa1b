//! Named statistics that can be evaluated on a permutation and combined into
//! tuples for distribution comparison.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::codes::{ic, invcode, lc, majcode, mc};
use crate::error::{Error, Result};
use crate::harness::golden;
use crate::perm::Permutation;
use crate::posset::PositionSet;
use crate::set_stats::{el_set, eul, eul_set};
use crate::word::{format_letters, sort_word};

/// A statistic value. Ordering is by variant, then by content; tuples of
/// values are compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum StatValue {
    Int(u64),
    Set(PositionSet),
    Word(Vec<u32>),
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Int(v) => write!(f, "{v}"),
            StatValue::Set(s) => write!(f, "{s}"),
            StatValue::Word(w) => f.write_str(&format_letters(w)),
        }
    }
}

/// Canonical text of a tuple: `(v1, v2, ...)`.
pub fn format_tuple(values: &[StatValue]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatisticSpec {
    Des,
    Maj,
    Inv,
    Ides,
    Imaj,
    Ligne,
    Iligne,
    Invcode,
    Majcode,
    Lc,
    Ic,
    Mc,
    SortMc,
    SortIc,
    EulInvcode,
    EulSetMajcode,
    EulSetInvcode,
    ElMc,
    ElIc,
    Sc,
    SortSc,
    ElSc,
}

impl StatisticSpec {
    pub const ALL: [StatisticSpec; 22] = [
        StatisticSpec::Des,
        StatisticSpec::Maj,
        StatisticSpec::Inv,
        StatisticSpec::Ides,
        StatisticSpec::Imaj,
        StatisticSpec::Ligne,
        StatisticSpec::Iligne,
        StatisticSpec::Invcode,
        StatisticSpec::Majcode,
        StatisticSpec::Lc,
        StatisticSpec::Ic,
        StatisticSpec::Mc,
        StatisticSpec::SortMc,
        StatisticSpec::SortIc,
        StatisticSpec::EulInvcode,
        StatisticSpec::EulSetMajcode,
        StatisticSpec::EulSetInvcode,
        StatisticSpec::ElMc,
        StatisticSpec::ElIc,
        StatisticSpec::Sc,
        StatisticSpec::SortSc,
        StatisticSpec::ElSc,
    ];

    pub fn name(self) -> &'static str {
        use StatisticSpec::*;
        match self {
            Des => "des",
            Maj => "maj",
            Inv => "inv",
            Ides => "ides",
            Imaj => "imaj",
            Ligne => "ligne",
            Iligne => "iligne",
            Invcode => "invcode",
            Majcode => "majcode",
            Lc => "lc",
            Ic => "ic",
            Mc => "mc",
            SortMc => "sort∘mc",
            SortIc => "sort∘ic",
            EulInvcode => "eul∘invcode",
            EulSetMajcode => "eul_set∘majcode",
            EulSetInvcode => "eul_set∘invcode",
            ElMc => "el∘mc",
            ElIc => "el∘ic",
            Sc => "sc",
            SortSc => "sort∘sc",
            ElSc => "el∘sc",
        }
    }

    /// True for statistics read from the n = 4 table rather than computed.
    pub fn needs_fixture(self) -> bool {
        matches!(
            self,
            StatisticSpec::Sc | StatisticSpec::SortSc | StatisticSpec::ElSc
        )
    }

    pub fn eval(self, sigma: &Permutation) -> Result<StatValue> {
        use StatisticSpec::*;
        let int = |v: usize| StatValue::Int(v as u64);
        Ok(match self {
            Des => int(sigma.des()),
            Maj => int(sigma.maj()),
            Inv => int(sigma.inv()),
            Ides => int(sigma.ides()),
            Imaj => int(sigma.imaj()),
            Ligne => StatValue::Set(sigma.ligne()),
            Iligne => StatValue::Set(sigma.iligne()),
            Invcode => StatValue::Word(invcode(sigma).into()),
            Majcode => StatValue::Word(majcode(sigma).into()),
            Lc => StatValue::Word(lc(sigma).into()),
            Ic => StatValue::Word(ic(sigma).into()),
            Mc => StatValue::Word(mc(sigma).into()),
            SortMc => StatValue::Word(mc(sigma).sorted()),
            SortIc => StatValue::Word(ic(sigma).sorted()),
            EulInvcode => int(eul(&invcode(sigma)).unwrap_or(0)),
            EulSetMajcode => StatValue::Set(eul_set(&majcode(sigma))),
            EulSetInvcode => StatValue::Set(eul_set(&invcode(sigma))),
            ElMc => StatValue::Set(el_set(&mc(sigma))),
            ElIc => StatValue::Set(el_set(&ic(sigma))),
            Sc => StatValue::Word(golden::sc_code(sigma)?.into()),
            SortSc => StatValue::Word(sort_word(golden::sc_code(sigma)?.digits())),
            ElSc => StatValue::Set(el_set(&golden::sc_code(sigma)?)),
        })
    }
}

impl fmt::Display for StatisticSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the canonical names, with `.` or `:` in place of `∘`.
impl FromStr for StatisticSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_lowercase().replace(['.', ':'], "∘");
        StatisticSpec::ALL
            .into_iter()
            .find(|spec| spec.name() == normalized)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

/// Parses a comma-separated list of statistic names.
pub fn parse_specs(s: &str) -> Result<Vec<StatisticSpec>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// Evaluates `specs` on `sigma` in order.
pub fn eval_tuple(sigma: &Permutation, specs: &[StatisticSpec]) -> Result<Vec<StatValue>> {
    if specs.is_empty() {
        return Err(Error::Precondition("empty statistic list".into()));
    }
    specs.iter().map(|spec| spec.eval(sigma)).collect()
}
