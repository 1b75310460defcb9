//! Deterministic generators for the lower-bound constructions, and a
//! dispatch record naming each one by a stable string.

mod aks;
mod conder;
mod layers;
mod packing;
mod parity;

pub use aks::{aks_appendix_deletes, aks_appendix_graph, aks_deletes, aks_graph};
pub use conder::{
    conder_cycle, conder_cycle_family, conder_cycle_pattern, conder_graph, mod3_ql_selection,
    mod3_ql_selection_with, mod3_selection_count, mod3_selection_lower_bound, mod3_selects,
    CycleFamily, Mod3Rule, MAX_SELECTION,
};
pub use layers::{even_odd_layer_graph, layer_complement, layer_union_mod};
pub use packing::disjoint_qm_packing;
pub use parity::{
    parity_q2_count, parity_q2_lower_bound, parity_q2_packing, parity_q2_odd_sum,
    parity_selects, ParityPacking,
};

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::counting::MAX_CYCLE_LEN;
use crate::cube::Subgraph;
use crate::error::{Error, Result};
use crate::pattern::Pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    LayerComplement,
    LayerUnionMod,
    AksGraph,
    AksAppendixGraph,
    ParityQ2Packing,
    ConderGraph,
    Mod3QlSelection,
    ConderCycleFamily,
    DisjointQmPacking,
    EvenOddLayers,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 10] = [
        ConstructionKind::LayerComplement,
        ConstructionKind::AksGraph,
        ConstructionKind::AksAppendixGraph,
        ConstructionKind::ParityQ2Packing,
        ConstructionKind::ConderGraph,
        ConstructionKind::Mod3QlSelection,
        ConstructionKind::ConderCycleFamily,
        ConstructionKind::DisjointQmPacking,
        ConstructionKind::LayerUnionMod,
        ConstructionKind::EvenOddLayers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::LayerComplement => "layer-complement",
            ConstructionKind::AksGraph => "aks",
            ConstructionKind::AksAppendixGraph => "aks-appendix",
            ConstructionKind::ParityQ2Packing => "parity-q2",
            ConstructionKind::ConderGraph => "conder",
            ConstructionKind::Mod3QlSelection => "mod3-select",
            ConstructionKind::ConderCycleFamily => "conder-cycles",
            ConstructionKind::DisjointQmPacking => "qm-packing",
            ConstructionKind::LayerUnionMod => "layer-mod",
            ConstructionKind::EvenOddLayers => "even-odd",
        }
    }

    /// Required and optional parameter names.
    pub fn params(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            ConstructionKind::LayerComplement => (&["n", "k", "i"], &[]),
            ConstructionKind::AksGraph => (&["n", "k", "i", "j"], &[]),
            ConstructionKind::AksAppendixGraph => (&["n", "k"], &[]),
            ConstructionKind::ParityQ2Packing | ConstructionKind::ConderGraph => (&["n"], &[]),
            ConstructionKind::Mod3QlSelection => (&["n", "l"], &["all_zero"]),
            ConstructionKind::ConderCycleFamily => (&["n", "l"], &[]),
            ConstructionKind::DisjointQmPacking => (&["n", "m"], &["l"]),
            ConstructionKind::LayerUnionMod => (&["n", "k", "j"], &["complement"]),
            ConstructionKind::EvenOddLayers => (&["n", "j"], &[]),
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::BadRange(format!("unknown construction {s:?}")))
    }
}

/// A construction name with its integer parameters. Flags are 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub params: BTreeMap<String, usize>,
}

/// A generated subgraph and the patterns it is claimed to avoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub graph: Subgraph,
    pub claimed_free_of: Vec<Pattern>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sidecar {
    pub construction: String,
    pub params: BTreeMap<String, usize>,
    pub edge_count: usize,
    pub claimed_free_of: Vec<Pattern>,
}

impl ConstructionSpec {
    pub fn new(kind: ConstructionKind) -> Self {
        ConstructionSpec {
            kind,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, name: &str, value: usize) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    fn get(&self, name: &'static str) -> Result<usize> {
        self.params.get(name).copied().ok_or(Error::MissingParam(name))
    }

    fn flag(&self, name: &'static str) -> Result<bool> {
        match self.params.get(name) {
            None | Some(0) => Ok(false),
            Some(1) => Ok(true),
            Some(v) => Err(Error::BadRange(format!("{name} is a 0/1 flag, got {v}"))),
        }
    }

    /// Rejects unknown and missing parameters.
    pub fn validate(&self) -> Result<()> {
        let (required, optional) = self.kind.params();
        if let Some(extra) = self
            .params
            .keys()
            .find(|p| !required.contains(&p.as_str()) && !optional.contains(&p.as_str()))
        {
            return Err(Error::BadRange(format!(
                "{} takes no parameter {extra:?}",
                self.kind
            )));
        }
        for p in required {
            self.get(p)?;
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Construction> {
        use ConstructionKind as K;
        self.validate()?;
        let n = self.get("n")?;
        let q = |k| Pattern::sub_cube(k);
        let (graph, claimed_free_of) = match self.kind {
            K::LayerComplement => {
                let k = self.get("k")?;
                (layer_complement(n, k, self.get("i")?)?, vec![q(k)?])
            }
            K::AksGraph => {
                let k = self.get("k")?;
                (aks_graph(n, k, self.get("i")?, self.get("j")?)?, vec![q(k)?])
            }
            K::AksAppendixGraph => {
                let k = self.get("k")?;
                (aks_appendix_graph(n, k)?, vec![q(k)?])
            }
            K::ParityQ2Packing => (parity_q2_packing(n)?.graph, vec![Pattern::Cycle(6)]),
            K::ConderGraph => (conder_graph(n)?, vec![Pattern::Cycle(6)]),
            K::Mod3QlSelection => {
                let l = self.get("l")?;
                let rule = if self.flag("all_zero")? {
                    Mod3Rule::AllZero
                } else {
                    Mod3Rule::Standard
                };
                let selected = mod3_ql_selection_with(n, l, rule)?;
                let g = Subgraph::from_subcubes(n, &selected)?
                    .with_name(format!("mod3-select n={n} l={l}"));
                (g, vec![])
            }
            K::ConderCycleFamily => {
                let family = conder_cycle_family(n, self.get("l")?)?;
                (family.union_graph, vec![Pattern::Cycle(6)])
            }
            K::DisjointQmPacking => {
                let m = self.get("m")?;
                let l = self.params.get("l").copied();
                let g = disjoint_qm_packing(n, m, l)?;
                // cycles in a Q_m have at most 2^m vertices; claims stop at
                // the longest cycle the enumerator handles
                let longest = 1usize << m.min(20);
                let claims = match l {
                    // components are single 2l-cycles
                    Some(l) => (2..=(longest / 2 + 1).min(MAX_CYCLE_LEN / 2))
                        .filter(|&k| k != l)
                        .map(|k| Pattern::Cycle(2 * k))
                        .collect(),
                    None => {
                        let mut c = Vec::new();
                        if m < n {
                            c.push(q(m + 1)?);
                        }
                        if longest + 2 <= MAX_CYCLE_LEN {
                            c.push(Pattern::Cycle(longest + 2));
                        }
                        c
                    }
                };
                (g, claims)
            }
            K::LayerUnionMod => {
                let k = self.get("k")?;
                let complement = self.flag("complement")?;
                let g = layer_union_mod(n, k, self.get("j")?, complement)?;
                let claims = if complement {
                    vec![q(k)?]
                } else if k >= 2 {
                    vec![Pattern::Cycle(4)]
                } else {
                    vec![]
                };
                (g, claims)
            }
            K::EvenOddLayers => (even_odd_layer_graph(n, self.get("j")?)?, vec![Pattern::Cycle(4)]),
        };
        Ok(Construction {
            spec: self.clone(),
            graph,
            claimed_free_of,
        })
    }
}

impl Construction {
    pub fn sidecar(&self) -> Sidecar {
        Sidecar {
            construction: self.spec.kind.name().to_string(),
            params: self.spec.params.clone(),
            edge_count: self.graph.len(),
            claimed_free_of: self.claimed_free_of.clone(),
        }
    }

    /// Writes the subgraph to `path` and the sidecar to `path` + `.json`.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        self.graph.save(path)?;
        let mut sidecar = path.as_os_str().to_owned();
        sidecar.push(".json");
        let json = serde_json::to_string_pretty(&self.sidecar()).expect("serializable");
        std::fs::write(sidecar, json + "\n")?;
        Ok(())
    }
}
