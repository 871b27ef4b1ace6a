//! Machine-readable reports: one struct covering every command, with a
//! fixed, documented key order (the declaration order below). JSON output
//! is byte-identical across runs for fixed input and flags; wall-clock
//! timings therefore appear only when explicitly requested.

use crate::groebner::DimensionReport;
use crate::jdual::{BirationalityReport, ComponentReport, LinearRankTest, SemilinearTest};
use crate::ratmap::{ConditionI, RationalDatum};
use crate::rees::SgdReport;
use crate::text::print_poly;
use serde::{Deserialize, Deserializer, Serialize};

/// Distinguish "key absent" from "key present and null" on round-trips:
/// a present key always deserializes into the outer `Some`.
fn double_option<'de, T, D>(de: D) -> Result<Option<Option<T>>, D::Error>
where
    T: Deserialize<'de>,
    D: Deserializer<'de>,
{
    Deserialize::deserialize(de).map(Some)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DimJson {
    /// `null` flags the empty variety (the unit ideal).
    pub dim: Option<u64>,
    pub codim: u64,
}

impl From<&DimensionReport> for DimJson {
    fn from(d: &DimensionReport) -> Self {
        DimJson {
            dim: d.dim.map(|v| v as u64),
            codim: d.codim as u64,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LinearRankJson {
    pub applicable: bool,
    pub fires: bool,
    pub phi1_rank: Option<u64>,
    pub image_dim: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SemilinearJson {
    pub fires: bool,
    pub codim: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SgdJson {
    /// `null` when the degree-1 slice is empty (undefined).
    pub value: Option<u64>,
    /// The same search without reducing modulo the image ideal.
    pub ambient: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ComponentJson {
    pub prime: Vec<String>,
    pub jdrank: Option<u64>,
    pub edim: Option<u64>,
    pub criterion_holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SecondInputJson {
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    pub map: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TimingJson {
    pub phase: String,
    pub seconds: f64,
}

/// The report: keys serialize in declaration order; absent analyses are
/// omitted, computed-but-empty values are `null` or `[]`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Default)]
pub struct Report {
    pub command: String,
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    pub map: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second_input: Option<SecondInputJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "double_option")]
    pub jdrank: Option<Option<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "double_option")]
    pub jdrank_plus: Option<Option<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub naive_rank: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dgi: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edim: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_dim: Option<DimJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image_ideal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image_dim: Option<DimJson>,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "double_option")]
    pub inverse: Option<Option<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "double_option")]
    pub inverse_degree: Option<Option<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "double_option")]
    pub inverse_verified: Option<Option<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extraction_diagnostic: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear_rank_test: Option<LinearRankJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semilinear_height_test: Option<SemilinearJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sgd: Option<SgdJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composite: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composite_degree: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalent: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restricted_ideal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restricted_map: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentJson>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<TimingJson>>,
}

pub fn printed_forms(datum: &RationalDatum) -> Vec<String> {
    datum.forms().iter().map(print_poly).collect()
}

pub fn printed_ideal(ideal: &crate::groebner::Ideal) -> Vec<String> {
    ideal.gens().iter().map(print_poly).collect()
}

impl Report {
    /// Fill the analysis fields from a birationality report.
    pub fn absorb(&mut self, a: &BirationalityReport, with_timings: bool) {
        self.verdict = Some(a.verdict.as_str().to_string());
        self.jdrank = Some(a.jdrank.map(|v| v as u64));
        self.jdrank_plus = Some(a.jdrank_plus.map(|v| v as u64));
        self.naive_rank = Some(a.naive_rank as u64);
        self.dgi = Some(a.dgi as u64);
        self.edim = Some(a.edim as u64);
        self.source_dim = Some((&a.source_dim).into());
        self.image_ideal = Some(printed_ideal(&a.image.ideal));
        self.image_dim = Some((&a.image.dimension).into());
        self.inverse = Some(a.inverse.as_ref().map(printed_forms));
        self.inverse_degree = Some(a.inverse.as_ref().map(|d| d.degree() as u64));
        self.inverse_verified = Some(a.inverse_verified);
        self.extraction_diagnostic = a.extraction_diagnostic.clone();
        self.linear_rank_test = a.linear_rank.as_ref().map(|t: &LinearRankTest| LinearRankJson {
            applicable: t.applicable,
            fires: t.fires,
            phi1_rank: t.phi1_rank.map(|v| v as u64),
            image_dim: t.image_dim.map(|v| v as u64),
        });
        self.semilinear_height_test = a.semilinear.as_ref().map(|t: &SemilinearTest| SemilinearJson {
            fires: t.fires,
            codim: t.codim.map(|v| v as u64),
        });
        self.sgd = a.sgd.as_ref().map(|s: &SgdReport| SgdJson {
            value: s.value.map(|v| v as u64),
            ambient: s.ambient.map(|v| v as u64),
        });
        self.components = a
            .components
            .iter()
            .map(|c: &ComponentReport| ComponentJson {
                prime: printed_ideal(&c.prime),
                jdrank: c.jdrank.map(|v| v as u64),
                edim: c.edim.map(|v| v as u64),
                criterion_holds: c.criterion_holds,
                error: c.error.clone(),
            })
            .collect();
        self.warnings = a.warnings.clone();
        if with_timings {
            self.timings = Some(
                a.timings
                    .iter()
                    .map(|(phase, seconds)| TimingJson {
                        phase: phase.clone(),
                        seconds: *seconds,
                    })
                    .collect(),
            );
        }
    }

    /// Record the condition-(i) status as a warning the way every
    /// downstream report does.
    pub fn note_condition_i(&mut self, c: ConditionI) {
        match c {
            ConditionI::Automatic => {}
            ConditionI::VerifiedAgainstPrimes => self.warnings.push(
                "condition (i) verified against supplied primes; their primality and completeness are trusted"
                    .to_string(),
            ),
            ConditionI::Unverified => self.warnings.push(
                "condition (i) (torsionfreeness over the image subring) unverified; supply minimal primes to check it"
                    .to_string(),
            ),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("command: {}", self.command));
        line(format!("characteristic: {}", self.characteristic));
        line(format!("vars: {}", self.vars.join(" ")));
        if !self.ideal.is_empty() {
            line(format!("ideal: {}", self.ideal.join(", ")));
        }
        line(format!("map: {}", self.map.join(", ")));
        if let Some(si) = &self.second_input {
            line(format!("second vars: {}", si.vars.join(" ")));
            if !si.ideal.is_empty() {
                line(format!("second ideal: {}", si.ideal.join(", ")));
            }
            line(format!("second map: {}", si.map.join(", ")));
        }
        if let Some(v) = &self.verdict {
            line(format!("verdict: {}", v));
        }
        let opt_num = |x: &Option<Option<u64>>| -> Option<String> {
            x.as_ref().map(|inner| match inner {
                Some(v) => v.to_string(),
                None => "undefined".to_string(),
            })
        };
        if let Some(s) = opt_num(&self.jdrank) {
            line(format!("jdrank: {}", s));
        }
        if let Some(s) = opt_num(&self.jdrank_plus) {
            line(format!("jdrank_plus: {}", s));
        }
        if let Some(v) = self.naive_rank {
            line(format!("naive_rank: {}", v));
        }
        if let Some(v) = self.dgi {
            line(format!("dgi: {}", v));
        }
        if let Some(v) = self.edim {
            line(format!("edim: {}", v));
        }
        let dim_str = |d: &DimJson| match d.dim {
            Some(v) => format!("{} (codim {})", v, d.codim),
            None => format!("empty (codim {})", d.codim),
        };
        if let Some(d) = &self.source_dim {
            line(format!("source_dim: {}", dim_str(d)));
        }
        if let Some(gens) = &self.image_ideal {
            if gens.is_empty() {
                line("image_ideal: (0)".to_string());
            } else {
                line(format!("image_ideal: {}", gens.join(", ")));
            }
        }
        if let Some(d) = &self.image_dim {
            line(format!("image_dim: {}", dim_str(d)));
        }
        if let Some(inv) = &self.inverse {
            match inv {
                Some(forms) => line(format!("inverse: {}", forms.join(", "))),
                None => line("inverse: none".to_string()),
            }
        }
        if let Some(Some(d)) = self.inverse_degree {
            line(format!("inverse_degree: {}", d));
        }
        if let Some(Some(v)) = self.inverse_verified {
            line(format!("inverse_verified: {}", v));
        }
        if let Some(d) = &self.extraction_diagnostic {
            line(format!("extraction_diagnostic: {}", d));
        }
        if let Some(t) = &self.linear_rank_test {
            line(format!(
                "linear_rank_test: applicable={} fires={} phi1_rank={} image_dim={}",
                t.applicable,
                t.fires,
                t.phi1_rank.map_or("n/a".to_string(), |v| v.to_string()),
                t.image_dim.map_or("n/a".to_string(), |v| v.to_string()),
            ));
        }
        if let Some(t) = &self.semilinear_height_test {
            line(format!(
                "semilinear_height_test: fires={} codim={}",
                t.fires,
                t.codim.map_or("n/a".to_string(), |v| v.to_string()),
            ));
        }
        if let Some(s) = &self.sgd {
            let v = s.value.map_or("undefined".to_string(), |v| v.to_string());
            match (s.value, s.ambient) {
                (Some(a), Some(b)) if a != b => {
                    line(format!("sgd: {} (ambient venue: {})", v, b))
                }
                _ => line(format!("sgd: {}", v)),
            }
        }
        if let Some(c) = &self.composite {
            line(format!("composite: {}", c.join(", ")));
        }
        if let Some(d) = self.composite_degree {
            line(format!("composite_degree: {}", d));
        }
        if let Some(e) = self.equivalent {
            line(format!("equivalent: {}", e));
        }
        if let Some(i) = &self.restricted_ideal {
            line(format!("restricted_ideal: {}", i.join(", ")));
        }
        if let Some(m) = &self.restricted_map {
            line(format!("restricted_map: {}", m.join(", ")));
        }
        for c in &self.components {
            line(format!(
                "component [{}]: jdrank={} edim={} criterion_holds={}{}",
                c.prime.join(", "),
                c.jdrank.map_or("undefined".to_string(), |v| v.to_string()),
                c.edim.map_or("n/a".to_string(), |v| v.to_string()),
                c.criterion_holds
                    .map_or("n/a".to_string(), |v| v.to_string()),
                c.error
                    .as_ref()
                    .map_or(String::new(), |e| format!(" error={}", e)),
            ));
        }
        if self.warnings.is_empty() {
            line("warnings: none".to_string());
        } else {
            for w in &self.warnings {
                line(format!("warning: {}", w));
            }
        }
        if let Some(timings) = &self.timings {
            for t in timings {
                line(format!("time[{}]: {:.3}s", t.phase, t.seconds));
            }
        }
        out
    }
}
