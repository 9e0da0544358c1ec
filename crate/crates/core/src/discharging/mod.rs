//! Exact-rational discharging: initial charges, declarative transfer rules,
//! conservation, and an audit of vertices that end negative.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::configurations::find_configurations;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metrics::{Class, Classification, Scheme};
use crate::rational::Rational;

/// Vertex filter: all present fields must hold.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Selector {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Class>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exclude: Vec<Class>,
}

impl Selector {
    fn matches(&self, g: &Graph, labels: &Classification, v: Vertex) -> bool {
        let label = labels.label(v);
        self.degree.is_none_or(|d| g.degree(v) == d)
            && self.classes.as_ref().is_none_or(|cs| cs.contains(&label))
            && !self.exclude.contains(&label)
    }

    fn classes_mentioned(&self) -> impl Iterator<Item = &Class> {
        self.classes.iter().flatten().chain(&self.exclude)
    }

    fn degree(d: usize) -> Self {
        Selector { degree: Some(d), ..Default::default() }
    }

    fn of(classes: &[Class]) -> Self {
        Selector { classes: Some(classes.to_vec()), ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Arity {
    /// Every neighbor matching the receiver selector gets the amount.
    AllMatching,
    /// One matching neighbor gets it: the unique one not matching `anchor` if there
    /// is exactly one such, otherwise the smallest id.
    OneDesignated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DischargeRule {
    pub id: String,
    pub sender: Selector,
    pub receiver: Selector,
    pub arity: Arity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<Selector>,
    #[serde(with = "ratio_string")]
    pub amount: Rational,
}

/// Amounts are written as `"p/q"` strings in rule files.
mod ratio_string {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        Rational::deserialize(d)
    }
}

fn rule(id: &str, sender: &[Class], receiver: Selector, amount: (i64, i64)) -> DischargeRule {
    DischargeRule {
        id: id.to_string(),
        sender: Selector::of(sender),
        receiver,
        arity: Arity::AllMatching,
        anchor: None,
        amount: Rational::new(amount.0, amount.1),
    }
}

fn designated(id: &str, sender: Class, anchor: &[Class], amount: (i64, i64)) -> DischargeRule {
    DischargeRule {
        arity: Arity::OneDesignated,
        anchor: Some(Selector::of(anchor)),
        ..rule(id, &[sender], Selector::degree(3), amount)
    }
}

pub fn builtin_ruleset(scheme: Scheme) -> Vec<DischargeRule> {
    use Class::*;
    match scheme {
        Scheme::Theta7 => vec![
            rule("T7.R1a", &[Deg4], Selector::degree(2), (6, 11)),
            rule("T7.R1b", &[Deg4], Selector::degree(3), (4, 33)),
            rule("T7.R2", &[Deg3B], Selector::degree(3), (1, 22)),
            designated("T7.R3", Deg3CStrong, &[Deg3B], (5, 132)),
            designated("T7.R4", Deg3CModerate, &[Deg3CWeak, Deg3CModerate, Deg3CStrong], (1, 33)),
            rule("T7.R5", &[Deg3CWeak], Selector::of(&[Deg3D]), (1, 66)),
        ],
        Scheme::Theta8 => vec![
            rule("T8.R1a", &[Deg5], Selector::of(&[Deg3BWeak]), (10, 31)),
            rule("T8.R1b", &[Deg5], Selector { exclude: vec![Deg3BWeak], ..Selector::degree(3) }, (8, 31)),
            rule("T8.R2", &[Deg4A], Selector::degree(4), (11, 124)),
            rule("T8.R3a", &[Deg4B], Selector::degree(3), (8, 31)),
            rule("T8.R3b", &[Deg4B], Selector::degree(4), (1, 31)),
            rule("T8.R4a", &[Deg4CStrong], Selector::of(&[Deg3C]), (7, 31)),
            rule("T8.R4b", &[Deg4CStrong], Selector::of(&[Deg3BStrong]), (4, 31)),
            rule("T8.R5", &[Deg4CWeak], Selector::of(&[Deg3C]), (6, 31)),
            rule("T8.R6", &[Deg4D], Selector::of(&[Deg3BStrong]), (4, 31)),
        ],
    }
}

/// A rule file: a bare list of rules, or an object with `rules` and an optional `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    pub rules: Vec<DischargeRule>,
    pub target: Option<Rational>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RuleFile {
    List(Vec<DischargeRule>),
    Object {
        rules: Vec<DischargeRule>,
        #[serde(default)]
        target: Option<Rational>,
    },
}

pub fn parse_ruleset(text: &str) -> Result<RuleSet> {
    let parsed: RuleFile = serde_json::from_str(text).map_err(|e| Error::Config(format!("rule file: {e}")))?;
    Ok(match parsed {
        RuleFile::List(rules) => RuleSet { rules, target: None },
        RuleFile::Object { rules, target } => RuleSet { rules, target },
    })
}

pub fn load_ruleset(path: &Path) -> Result<RuleSet> {
    parse_ruleset(&std::fs::read_to_string(path)?)
}

/// Rejects rules that mention classes foreign to the scheme or have nonpositive amounts.
pub fn validate_rules(rules: &[DischargeRule], scheme: Scheme) -> Result<()> {
    let known = scheme.classes();
    for r in rules {
        if !r.amount.is_positive() {
            return Err(Error::Config(format!("rule {}: amount must be positive", r.id)));
        }
        if r.arity == Arity::OneDesignated && r.anchor.is_none() {
            return Err(Error::Config(format!("rule {}: ONE_DESIGNATED needs an anchor", r.id)));
        }
        let mentioned = r.sender.classes_mentioned().chain(r.receiver.classes_mentioned()).chain(
            r.anchor.iter().flat_map(|a| a.classes_mentioned()),
        );
        for c in mentioned {
            if !known.contains(c) {
                return Err(Error::Config(format!("rule {} mentions {c}, which is not a {scheme} class", r.id)));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub rule: String,
    pub sender: Vertex,
    pub receiver: Vertex,
    pub amount: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub target: Rational,
    pub initial: Vec<Rational>,
    #[serde(rename = "final")]
    pub final_charges: Vec<Rational>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn sum_initial(&self) -> Rational {
        self.initial.iter().sum()
    }

    pub fn sum_final(&self) -> Rational {
        self.final_charges.iter().sum()
    }

    pub fn is_conserved(&self) -> bool {
        self.sum_initial() == self.sum_final()
    }
}

/// `ω(v) = d(v) − target`.
pub fn initial_charges(g: &Graph, target: &Rational) -> Vec<Rational> {
    (0..g.n()).map(|v| Rational::from(g.degree(v)) - target).collect()
}

pub fn apply_rules(g: &Graph, labels: &Classification, rules: &[DischargeRule], target: &Rational) -> Result<ChargeLedger> {
    validate_rules(rules, labels.scheme)?;
    let initial = initial_charges(g, target);
    let mut transfers = Vec::new();
    for r in rules {
        for x in 0..g.n() {
            if labels.label(x) == Class::Unclassified || !r.sender.matches(g, labels, x) {
                continue;
            }
            let eligible: Vec<Vertex> =
                g.neighbors(x).iter().copied().filter(|&y| r.receiver.matches(g, labels, y)).collect();
            let receivers = match r.arity {
                Arity::AllMatching => eligible,
                Arity::OneDesignated => {
                    let anchor = r.anchor.as_ref().expect("validated");
                    let outside: Vec<Vertex> =
                        eligible.iter().copied().filter(|&y| !anchor.matches(g, labels, y)).collect();
                    match (outside.as_slice(), eligible.first()) {
                        ([only], _) => vec![*only],
                        (_, Some(&first)) => vec![first],
                        (_, None) => vec![],
                    }
                }
            };
            transfers.extend(receivers.into_iter().map(|y| Transfer {
                rule: r.id.clone(),
                sender: x,
                receiver: y,
                amount: r.amount.clone(),
            }));
        }
    }
    transfers.sort_by(|a, b| (&a.rule, a.sender, a.receiver).cmp(&(&b.rule, b.sender, b.receiver)));
    let mut final_charges = initial.clone();
    for t in &transfers {
        final_charges[t.sender] -= &t.amount;
        final_charges[t.receiver] += &t.amount;
    }
    Ok(ChargeLedger { target: target.clone(), initial, final_charges, transfers })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeVertex {
    pub vertex: Vertex,
    pub class: Class,
    #[serde(rename = "final")]
    pub final_charge: Rational,
    /// Catalog configurations whose image meets the closed neighborhood, e.g. `"T7.2v violation"`.
    pub diagnosis: Vec<String>,
}

/// Every vertex with negative final charge, with the catalog configurations near it.
pub fn audit_negative(ledger: &ChargeLedger, g: &Graph, labels: &Classification, scheme: Scheme) -> Vec<NegativeVertex> {
    let negative: Vec<Vertex> = (0..g.n()).filter(|&v| ledger.final_charges[v].is_negative()).collect();
    if negative.is_empty() {
        return Vec::new();
    }
    let matches = find_configurations(g, scheme, labels);
    negative
        .into_iter()
        .map(|v| {
            let near: BTreeSet<&str> = matches
                .iter()
                .filter(|m| m.assignment.iter().any(|&w| w == v || g.has_edge(v, w)))
                .map(|m| m.pattern)
                .collect();
            NegativeVertex {
                vertex: v,
                class: labels.label(v),
                final_charge: ledger.final_charges[v].clone(),
                diagnosis: near.into_iter().map(|id| format!("{id} violation")).collect(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexCharge {
    pub v: Vertex,
    pub class: Class,
    pub initial: Rational,
    #[serde(rename = "final")]
    pub final_charge: Rational,
}

/// What the `discharge` command prints for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct DischargeReport {
    pub graph6: String,
    pub scheme: Scheme,
    pub target: String,
    pub sum_initial: Rational,
    pub sum_final: Rational,
    pub conserved: bool,
    pub vertices: Vec<VertexCharge>,
    pub transfers: Vec<Transfer>,
    pub negatives: Vec<NegativeVertex>,
}

pub fn discharge_report(g: &Graph, scheme: Scheme, rules: &RuleSet) -> Result<DischargeReport> {
    let labels = crate::metrics::classify(g, scheme);
    let target = rules.target.clone().unwrap_or_else(|| scheme.target());
    let ledger = apply_rules(g, &labels, &rules.rules, &target)?;
    let negatives = audit_negative(&ledger, g, &labels, scheme);
    Ok(DischargeReport {
        graph6: g.to_graph6(),
        scheme,
        target: target.to_string(),
        sum_initial: ledger.sum_initial(),
        sum_final: ledger.sum_final(),
        conserved: ledger.is_conserved(),
        vertices: (0..g.n())
            .map(|v| VertexCharge {
                v,
                class: labels.label(v),
                initial: ledger.initial[v].clone(),
                final_charge: ledger.final_charges[v].clone(),
            })
            .collect(),
        transfers: ledger.transfers,
        negatives,
    })
}
