//! Named generator lists and their text file format.
//!
//! ```text
//! # Frobenius group of order 20
//! name F20
//! degree 5
//! gen (0 1 2 3 4)
//! gen (1 2 4 3)
//! ```
//!
//! Points are 0-based. `#` starts a comment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, degree: usize, generators: Vec<Permutation>) -> Self {
        Self {
            name: name.into(),
            degree,
            generators,
        }
    }

    /// Convenience constructor from cycle-notation strings.
    pub fn from_cycles(name: impl Into<String>, degree: usize, gens: &[&str]) -> Result<Self> {
        let generators = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s))
            .collect::<Result<_>>()?;
        Ok(Self::new(name, degree, generators))
    }

    pub fn close(&self, element_cap: usize) -> Result<Group> {
        Group::generate(self.degree, &self.generators, element_cap)
    }

    /// Direct product on disjoint point sets.
    pub fn product(&self, other: &GroupSpec, name: impl Into<String>) -> GroupSpec {
        let degree = self.degree + other.degree;
        let generators = self
            .generators
            .iter()
            .map(|p| p.embed(0, degree))
            .chain(other.generators.iter().map(|p| p.embed(self.degree, degree)))
            .collect();
        GroupSpec::new(name, degree, generators)
    }

    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut name = None;
        let mut degree = None;
        let mut gens: Vec<(usize, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = match line.split_once(char::is_whitespace) {
                Some((k, v)) => (k, v.trim()),
                None => (line, ""),
            };
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            match key {
                "name" => {
                    if value.is_empty() {
                        return Err(err("empty name".into()));
                    }
                    if name.replace(value.to_string()).is_some() {
                        return Err(err("duplicate name".into()));
                    }
                }
                "degree" => {
                    let d: usize = value
                        .parse()
                        .map_err(|_| err(format!("bad degree {value:?}")))?;
                    if d == 0 {
                        return Err(err("degree must be positive".into()));
                    }
                    if degree.replace(d).is_some() {
                        return Err(err("duplicate degree".into()));
                    }
                }
                "gen" => gens.push((line_no, value.to_string())),
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        let last_line = text.lines().count().max(1);
        let name = name.ok_or(Error::Parse {
            line: last_line,
            message: "missing `name`".into(),
        })?;
        let degree = degree.ok_or(Error::Parse {
            line: last_line,
            message: "missing `degree`".into(),
        })?;
        let generators = gens
            .into_iter()
            .map(|(line, s)| {
                Permutation::parse_cycles(degree, &s).map_err(|e| Error::Parse {
                    line,
                    message: e.to_string(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(GroupSpec {
            name,
            degree,
            generators,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "name {}", self.name);
        let _ = writeln!(out, "degree {}", self.degree);
        for g in &self.generators {
            let _ = writeln!(out, "gen {g}");
        }
        out
    }
}
