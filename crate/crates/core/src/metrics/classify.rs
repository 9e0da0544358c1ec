//! Vertex classes for the two discharging schemes.
//!
//! Base classes depend on neighbor degrees only; subclasses depend on the base
//! classes of neighbors, so two passes are enough.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Scheme {
    #[serde(rename = "theta7")]
    Theta7,
    #[serde(rename = "theta8")]
    Theta8,
}

impl Scheme {
    pub fn theta(self) -> usize {
        match self {
            Scheme::Theta7 => 7,
            Scheme::Theta8 => 8,
        }
    }

    /// Palette size of the matching theorem.
    pub fn palette(self) -> u32 {
        match self {
            Scheme::Theta7 => 13,
            Scheme::Theta8 => 20,
        }
    }

    /// Initial charge offset; also the mad threshold of the theorem.
    pub fn target(self) -> Rational {
        match self {
            Scheme::Theta7 => Rational::new(34, 11),
            Scheme::Theta8 => Rational::new(113, 31),
        }
    }

    /// Degrees that receive a class.
    pub fn admissible_degrees(self) -> &'static [usize] {
        match self {
            Scheme::Theta7 => &[2, 3, 4],
            Scheme::Theta8 => &[3, 4, 5],
        }
    }

    pub fn classes(self) -> &'static [Class] {
        use Class::*;
        match self {
            Scheme::Theta7 => &[Deg2, Deg3A, Deg3B, Deg3CWeak, Deg3CModerate, Deg3CStrong, Deg3D, Deg4],
            Scheme::Theta8 => &[
                Deg3A, Deg3BStrong, Deg3BWeak, Deg3C, Deg3D, Deg4A, Deg4B, Deg4CStrong, Deg4CWeak, Deg4D,
                Deg5,
            ],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Theta7 => "theta7",
            Scheme::Theta8 => "theta8",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "theta7" | "7" => Ok(Scheme::Theta7),
            "theta8" | "8" => Ok(Scheme::Theta8),
            _ => Err(format!("unknown scheme {s:?} (expected theta7 or theta8)")),
        }
    }
}

/// A vertex label. Which labels occur depends on the scheme; `Unclassified` is
/// used for vertices outside a scheme's taxonomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Deg2,
    Deg3A,
    Deg3B,
    Deg3BStrong,
    Deg3BWeak,
    Deg3C,
    Deg3CWeak,
    Deg3CModerate,
    Deg3CStrong,
    Deg3D,
    Deg4,
    Deg4A,
    Deg4B,
    Deg4CStrong,
    Deg4CWeak,
    Deg4D,
    Deg5,
    Unclassified,
}

const NAMES: &[(Class, &str)] = &[
    (Class::Deg2, "DEG2"),
    (Class::Deg3A, "DEG3A"),
    (Class::Deg3B, "DEG3B"),
    (Class::Deg3BStrong, "DEG3B_STRONG"),
    (Class::Deg3BWeak, "DEG3B_WEAK"),
    (Class::Deg3C, "DEG3C"),
    (Class::Deg3CWeak, "DEG3C_WEAK"),
    (Class::Deg3CModerate, "DEG3C_MODERATE"),
    (Class::Deg3CStrong, "DEG3C_STRONG"),
    (Class::Deg3D, "DEG3D"),
    (Class::Deg4, "DEG4"),
    (Class::Deg4A, "DEG4A"),
    (Class::Deg4B, "DEG4B"),
    (Class::Deg4CStrong, "DEG4C_STRONG"),
    (Class::Deg4CWeak, "DEG4C_WEAK"),
    (Class::Deg4D, "DEG4D"),
    (Class::Deg5, "DEG5"),
    (Class::Unclassified, "UNCLASSIFIED"),
];

impl Class {
    pub fn name(self) -> &'static str {
        NAMES.iter().find(|(c, _)| *c == self).map(|(_, s)| *s).unwrap()
    }

    /// Degree implied by the label, if any.
    pub fn degree(self) -> Option<usize> {
        use Class::*;
        match self {
            Deg2 => Some(2),
            Deg3A | Deg3B | Deg3BStrong | Deg3BWeak | Deg3C | Deg3CWeak | Deg3CModerate | Deg3CStrong
            | Deg3D => Some(3),
            Deg4 | Deg4A | Deg4B | Deg4CStrong | Deg4CWeak | Deg4D => Some(4),
            Deg5 => Some(5),
            Unclassified => None,
        }
    }

    pub fn is_3c_any(self) -> bool {
        matches!(self, Class::Deg3CWeak | Class::Deg3CModerate | Class::Deg3CStrong | Class::Deg3C)
    }

    pub fn is_3b_any(self) -> bool {
        matches!(self, Class::Deg3B | Class::Deg3BStrong | Class::Deg3BWeak)
    }

    pub fn is_4c_any(self) -> bool {
        matches!(self, Class::Deg4CStrong | Class::Deg4CWeak)
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        NAMES
            .iter()
            .find(|(_, n)| n.eq_ignore_ascii_case(s))
            .map(|(c, _)| *c)
            .ok_or_else(|| format!("unknown class {s:?}"))
    }
}

impl Serialize for Class {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Class {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub vertex: Vertex,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub scheme: Scheme,
    pub labels: Vec<Class>,
    pub warnings: Vec<Warning>,
}

impl Classification {
    pub fn label(&self, v: Vertex) -> Class {
        self.labels[v]
    }
}

pub fn classify(g: &Graph, scheme: Scheme) -> Classification {
    match scheme {
        Scheme::Theta7 => classify_theta7(g),
        Scheme::Theta8 => classify_theta8(g),
    }
}

fn count_deg(g: &Graph, v: Vertex, d: usize) -> usize {
    g.neighbors(v).iter().filter(|&&w| g.degree(w) == d).count()
}

fn all_neighbors_in(g: &Graph, v: Vertex, allowed: &[usize]) -> bool {
    g.neighbors(v).iter().all(|&w| allowed.contains(&g.degree(w)))
}

fn unclassified(warnings: &mut Vec<Warning>, v: Vertex, why: String) -> Class {
    warnings.push(Warning { vertex: v, message: why });
    Class::Unclassified
}

pub fn classify_theta7(g: &Graph) -> Classification {
    let mut warnings = Vec::new();
    let mut labels: Vec<Class> = (0..g.n())
        .map(|v| match g.degree(v) {
            2 => Class::Deg2,
            4 => Class::Deg4,
            3 if all_neighbors_in(g, v, &[3, 4]) => match count_deg(g, v, 4) {
                3 => Class::Deg3A,
                2 => Class::Deg3B,
                1 => Class::Deg3C,
                _ => Class::Deg3D,
            },
            3 => unclassified(&mut warnings, v, "3-vertex with a neighbor of degree other than 3 or 4".into()),
            d => unclassified(&mut warnings, v, format!("degree {d} is outside {{2,3,4}}")),
        })
        .collect();

    let base = labels.clone();
    for v in 0..g.n() {
        if base[v] != Class::Deg3C {
            continue;
        }
        let nbrs = g.neighbors(v);
        let threes: Vec<Vertex> = nbrs.iter().copied().filter(|&w| g.degree(w) == 3).collect();
        labels[v] = if threes.iter().all(|&w| base[w] == Class::Deg3D) {
            Class::Deg3CWeak
        } else if nbrs.iter().any(|&w| base[w] == Class::Deg3B) {
            Class::Deg3CStrong
        } else {
            Class::Deg3CModerate
        };
        if labels[v] == Class::Deg3CModerate && !nbrs.iter().any(|&w| base[w] == Class::Deg3C) {
            warnings.push(Warning {
                vertex: v,
                message: "3(C_moderate)-vertex without a 3(C)-neighbor".into(),
            });
        }
    }
    warnings.sort_by_key(|w| w.vertex);
    Classification { scheme: Scheme::Theta7, labels, warnings }
}

pub fn classify_theta8(g: &Graph) -> Classification {
    let mut warnings = Vec::new();
    let mut labels: Vec<Class> = (0..g.n())
        .map(|v| match g.degree(v) {
            5 => Class::Deg5,
            3 if all_neighbors_in(g, v, &[3, 4, 5]) => match count_deg(g, v, 5) {
                3 => Class::Deg3A,
                2 => Class::Deg3B,
                1 => Class::Deg3C,
                _ => Class::Deg3D,
            },
            3 => unclassified(&mut warnings, v, "3-vertex with a neighbor of degree below 3".into()),
            4 if all_neighbors_in(g, v, &[3, 4]) => match count_deg(g, v, 4) {
                4 => Class::Deg4A,
                3 => Class::Deg4B,
                2 => Class::Deg4CStrong,
                1 => Class::Deg4D,
                _ => unclassified(&mut warnings, v, "4-vertex with four 3-neighbors".into()),
            },
            4 => unclassified(&mut warnings, v, "4-vertex with a neighbor of degree other than 3 or 4".into()),
            d => unclassified(&mut warnings, v, format!("degree {d} is outside {{3,4,5}}")),
        })
        .collect();

    let base = labels.clone();
    for v in 0..g.n() {
        match base[v] {
            Class::Deg3B => {
                let third = g.neighbors(v).iter().map(|&w| g.degree(w)).find(|&d| d != 5);
                labels[v] = match third {
                    Some(4) => Class::Deg3BStrong,
                    Some(3) => Class::Deg3BWeak,
                    _ => unreachable!("3(B) has exactly one non-5 neighbor of degree 3 or 4"),
                };
            }
            Class::Deg4CStrong => {
                let c = g.neighbors(v).iter().filter(|&&w| base[w] == Class::Deg3C).count();
                if c == 2 {
                    labels[v] = Class::Deg4CWeak;
                }
            }
            _ => {}
        }
    }
    warnings.sort_by_key(|w| w.vertex);
    Classification { scheme: Scheme::Theta8, labels, warnings }
}
