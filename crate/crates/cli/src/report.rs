//! Computation of one ideal's data and its JSON form.

use std::collections::BTreeMap;

use clap::ValueEnum;
use mixprod::betti::{closed_betti_table, hochster_betti, BettiTable, ORACLE_LIMIT};
use mixprod::{Field, GroundSet, Ideal, MixedSpec};
use serde::Serialize;

use crate::CliError;

/// Ideals with more generators than this are not listed generator by generator.
pub const LIST_LIMIT: u128 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Both when possible, otherwise whichever applies.
    Auto,
    Closed,
    Hochster,
    Both,
}

/// The ideal as given: an expression, a generator list, or both.
#[derive(Clone, Debug)]
pub struct Input {
    pub ground: GroundSet,
    pub spec: Option<MixedSpec>,
    /// `None` when the generators are too many to expand.
    pub ideal: Option<Ideal>,
}

impl Input {
    pub fn from_spec(spec: MixedSpec) -> Self {
        let ideal = spec.make_ideal().ok();
        Self {
            ground: spec.ground(),
            spec: Some(spec),
            ideal,
        }
    }

    pub fn from_ideal(ideal: Ideal) -> Self {
        Self {
            ground: ideal.ground(),
            spec: None,
            ideal: Some(ideal),
        }
    }

    pub fn describe(&self) -> IdealJson {
        IdealJson {
            expr: self.spec.as_ref().map(|s| s.to_string()),
            gens: listed_gens(self.ideal.as_ref(), self.spec.as_ref()),
        }
    }

    fn within_oracle(&self) -> bool {
        self.ground.len() <= ORACLE_LIMIT
    }

    fn closed_table(&self, field: Field) -> Option<Result<BettiTable, CliError>> {
        let spec = self.spec.as_ref()?;
        match closed_betti_table(spec, field) {
            Err(mixprod::Error::UnsupportedShape(_)) => None,
            other => Some(other.map_err(CliError::domain)),
        }
    }

    fn oracle_table(&self, field: Field) -> Result<BettiTable, CliError> {
        let ideal = self.ideal.as_ref().ok_or_else(|| {
            CliError::Domain("too many generators for the Hochster oracle".into())
        })?;
        hochster_betti(ideal, field).map_err(CliError::domain)
    }

    /// Betti tables by the requested method; with `Method::Auto` the closed
    /// table is preferred and the oracle is added when `both` is true.
    pub fn tables(&self, field: Field, method: Method, both: bool) -> Result<Tables, CliError> {
        let unsupported = || {
            CliError::Domain(match &self.spec {
                Some(s) => format!("no closed Betti formula for {s}"),
                None => "closed formulas need a mixed product expression, not --gens".into(),
            })
        };
        match method {
            Method::Closed => Ok(Tables::closed(
                self.closed_table(field).ok_or_else(unsupported)??,
            )),
            Method::Hochster => Ok(Tables::oracle(self.oracle_table(field)?)),
            Method::Both => Ok(Tables::both(
                self.closed_table(field).ok_or_else(unsupported)??,
                self.oracle_table(field)?,
            )),
            Method::Auto => match self.closed_table(field) {
                Some(closed) if both && self.within_oracle() => {
                    Ok(Tables::both(closed?, self.oracle_table(field)?))
                }
                Some(closed) => Ok(Tables::closed(closed?)),
                None => Ok(Tables::oracle(self.oracle_table(field)?)),
            },
        }
    }
}

/// Generator strings, or nothing when there are more than [`LIST_LIMIT`].
fn listed_gens(ideal: Option<&Ideal>, spec: Option<&MixedSpec>) -> Vec<String> {
    match ideal {
        Some(i) if generator_count(ideal, spec) <= LIST_LIMIT => {
            i.gens().map(|g| g.to_string()).collect()
        }
        _ => Vec::new(),
    }
}

/// Number of minimal generators, whether or not they were expanded.
pub fn generator_count(ideal: Option<&Ideal>, spec: Option<&MixedSpec>) -> u128 {
    match (ideal, spec) {
        (Some(i), _) => i.len() as u128,
        (None, Some(s)) => s.generator_count().unwrap_or(u128::MAX),
        (None, None) => 0,
    }
}

/// The table(s) computed for a request.
#[derive(Clone, Debug)]
pub struct Tables {
    pub closed: Option<BettiTable>,
    pub oracle: Option<BettiTable>,
}

impl Tables {
    fn closed(t: BettiTable) -> Self {
        Self {
            closed: Some(t),
            oracle: None,
        }
    }

    fn oracle(t: BettiTable) -> Self {
        Self {
            closed: None,
            oracle: Some(t),
        }
    }

    fn both(closed: BettiTable, oracle: BettiTable) -> Self {
        Self {
            closed: Some(closed),
            oracle: Some(oracle),
        }
    }

    /// The table the report is read from; the oracle wins when both exist.
    pub fn primary(&self) -> &BettiTable {
        self.oracle
            .as_ref()
            .or(self.closed.as_ref())
            .expect("at least one table")
    }

    pub fn method(&self) -> &'static str {
        match (&self.closed, &self.oracle) {
            (Some(_), Some(_)) => "both",
            (Some(_), None) => "closed",
            _ => "hochster",
        }
    }

    /// `Some(equal)` when both tables exist.
    pub fn agree(&self) -> Option<bool> {
        match (&self.closed, &self.oracle) {
            (Some(c), Some(o)) => Some(c.same_numbers(o)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealJson {
    pub expr: Option<String>,
    pub gens: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertJson {
    /// `(1 - t)^{n+m} Hilb(S/I, t)` from counting faces; absent beyond the
    /// oracle's reach.
    pub face_count: Option<Vec<i128>>,
    /// `Σ (-1)^i β_{i,j} t^j` from the Betti table.
    pub k_polynomial: Vec<i128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub n: u32,
    pub m: u32,
    pub ideal: IdealJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<IdealJson>,
    /// `β_{i,j}(S/I)` keyed by `i` then `j`.
    pub betti: BTreeMap<usize, BTreeMap<usize, u128>>,
    pub pd: usize,
    pub depth: u32,
    pub dim: u32,
    pub cm: bool,
    #[serde(rename = "type")]
    pub cm_type: Option<u128>,
    pub gorenstein: bool,
    pub field: String,
    pub method: &'static str,
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertJson>,
}

impl Report {
    pub fn new(input: &Input, tables: &Tables, field: Field) -> Result<Self, CliError> {
        let table = tables.primary();
        let dim = match (&input.spec, &input.ideal) {
            (Some(s), _) => s
                .krull_dim()
                .ok_or_else(|| CliError::Domain("the unit ideal has no quotient".into()))?,
            (None, Some(i)) => i.krull_dim().map_err(CliError::domain)?,
            (None, None) => unreachable!("input without ideal or expression"),
        };
        let cm = mixprod::cm::CmReport::from_table(table, dim);
        let mut betti: BTreeMap<usize, BTreeMap<usize, u128>> = BTreeMap::new();
        for ((i, j), v) in table.entries() {
            betti.entry(i).or_default().insert(j, v);
        }
        Ok(Self {
            n: input.ground.n(),
            m: input.ground.m(),
            ideal: input.describe(),
            dual: None,
            betti,
            pd: cm.projective_dimension,
            depth: cm.depth,
            dim,
            cm: cm.is_cm(),
            cm_type: cm.cm_type,
            gorenstein: cm.is_gorenstein(),
            field: field.to_string(),
            method: tables.method(),
            agree: tables.agree(),
            hilbert: None,
        })
    }
}

/// Builds an [`IdealJson`] for a computed ideal with an optional expression.
pub fn ideal_json(ideal: Option<&Ideal>, spec: Option<&MixedSpec>) -> IdealJson {
    IdealJson {
        expr: spec.map(|s| s.to_string()),
        gens: listed_gens(ideal, spec),
    }
}
