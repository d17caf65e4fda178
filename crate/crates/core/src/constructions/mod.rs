//! Constructions that turn pentagons in a congruence lattice into explicit
//! failures of commutator laws.

pub mod better_pentagon;
pub mod gadgets;
pub mod graph;
pub mod herringbone;
pub mod pipeline;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::centrality::MatrixSet;
use crate::error::{Error, Result};
use crate::partition::Partition;

pub use better_pentagon::{better_pentagon, BetterPentagon};
pub use gadgets::{left_distributivity_gadget, normalize_noncommutativity, right_distributivity_gadget, Normalized};
pub use graph::{graph_algebra, GraphAlgebra, PairSpace};
pub use herringbone::{herringbone, HerringboneState};
pub use pipeline::{lemma410_pipeline, semidistributivity_failure, Lemma410, SdFailure};

/// One machine-checked step of a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub holds: bool,
}

/// A derived algebra with named congruences and the checks performed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentagonReport {
    pub input: Vec<(String, Partition)>,
    pub algebra: FiniteAlgebra,
    pub labels: Vec<(String, Partition)>,
    pub assertions: Vec<Assertion>,
}

impl PentagonReport {
    pub fn all_hold(&self) -> bool {
        self.assertions.iter().all(|a| a.holds)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.assertions.iter().filter(|a| !a.holds).map(|a| a.name.as_str()).collect()
    }

    pub fn label(&self, name: &str) -> Option<&Partition> {
        self.labels.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

#[derive(Debug, Default)]
pub(crate) struct Checks(Vec<Assertion>);

impl Checks {
    pub(crate) fn check(&mut self, name: impl Into<String>, holds: bool) -> bool {
        self.0.push(Assertion {
            name: name.into(),
            holds,
        });
        holds
    }

    pub(crate) fn into_vec(self) -> Vec<Assertion> {
        self.0
    }
}

/// Maps a quadruple of `M(α,β)` into another algebra by evaluating its
/// provenance term on transported generators, coordinate by coordinate.
pub(crate) fn transport(
    m: &MatrixSet,
    index: usize,
    target: &FiniteAlgebra,
    leaf: impl Fn([usize; 4]) -> Option<[usize; 4]>,
) -> Result<[usize; 4]> {
    let images: Vec<[usize; 4]> = m
        .generators()
        .iter()
        .map(|&g| leaf(g).ok_or_else(|| Error::Validation(format!("generator {g:?} has no image"))))
        .collect::<Result<_>>()?;
    let term = m.provenance(index);
    let mut out = [0; 4];
    for (c, slot) in out.iter_mut().enumerate() {
        let assign: Vec<usize> = images.iter().map(|g| g[c]).collect();
        *slot = target.eval_term(&term, &assign)?;
    }
    Ok(out)
}

pub(crate) fn labeled(items: &[(&str, &Partition)]) -> Vec<(String, Partition)> {
    items.iter().map(|(n, p)| (n.to_string(), (*p).clone())).collect()
}
