//! Approximation-preserving reductions: forward instance maps, backward
//! solution maps and the ratio each one transfers.

mod gadgets;
mod independent;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use gadgets::{
    ds_to_setcover, dummy_swap_backward, fas_backward, is_to_mmvc, mmvc_backward, mmvc_from_is,
    setcover_to_hittingset, vc_to_ds, vc_to_fas, vc_to_fvs, vc_to_ids, Dummy, GadgetMap, Origin,
};
pub use independent::{
    degeneracy_coloring, ids_pendant_value, ids_pendant_value_with, is_to_lcol, is_to_max2sat,
    is_to_planar, is_to_setpacking, lcol_backward, max2sat_backward, planar_backward,
    PLANAR_COLORS,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Candidate, Instance, Payload, Problem};
use crate::validate::validate;

/// One elementary reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    VcToDs,
    DsToSetCover,
    SetCoverToHittingSet,
    HittingSetToSetCover,
    VcToFvs,
    VcToIds,
    VcToFas,
    IsToMax2Sat,
    IsToSetPacking,
    /// `t` pendants per vertex; `None` means `n + 1`.
    IsToMmvc {
        t: Option<usize>,
    },
    IsToLcol {
        colors: usize,
    },
    IsToPlanar,
}

/// How a guarantee on the target turns into one on the source.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Transfer {
    /// A ratio-`r` target solution maps to a ratio-`r` source solution.
    Identity,
    /// A ratio-`r` target solution maps to a ratio-`factor * r` one.
    Scaled {
        factor: f64,
    },
    /// Source value at least target value minus the source edge count.
    LoseEdgeClauses,
    /// Source value equals `(target value - n) / (t - 1)` for minimal covers.
    Pendant {
        t: Option<usize>,
    },
    Chain {
        parts: Vec<Transfer>,
    },
}

impl Transfer {
    /// The source ratio guaranteed by a target ratio `r`, when the transfer
    /// is a pure ratio map.
    pub fn ratio_bound(&self, r: f64) -> Option<f64> {
        match self {
            Transfer::Identity => Some(r),
            Transfer::Scaled { factor } => Some(factor * r),
            Transfer::Chain { parts } => {
                parts.iter().rev().try_fold(r, |acc, p| p.ratio_bound(acc))
            }
            _ => None,
        }
    }

    fn then(self, next: Transfer) -> Transfer {
        let mut parts = match self {
            Transfer::Chain { parts } => parts,
            Transfer::Identity => Vec::new(),
            other => vec![other],
        };
        match next {
            Transfer::Chain { parts: more } => parts.extend(more),
            Transfer::Identity => {}
            other => parts.push(other),
        }
        match parts.len() {
            0 => Transfer::Identity,
            1 => parts.pop().expect("one part"),
            _ => Transfer::Chain { parts },
        }
    }
}

impl Step {
    pub fn source(self) -> Problem {
        match self {
            Step::VcToDs | Step::VcToFvs | Step::VcToIds | Step::VcToFas => Problem::Vc,
            Step::DsToSetCover => Problem::Ds,
            Step::SetCoverToHittingSet => Problem::SetCover,
            Step::HittingSetToSetCover => Problem::HittingSet,
            Step::IsToMax2Sat
            | Step::IsToSetPacking
            | Step::IsToMmvc { .. }
            | Step::IsToLcol { .. }
            | Step::IsToPlanar => Problem::Is,
        }
    }

    pub fn target(self) -> Problem {
        match self {
            Step::VcToDs => Problem::Ds,
            Step::DsToSetCover | Step::HittingSetToSetCover => Problem::SetCover,
            Step::SetCoverToHittingSet => Problem::HittingSet,
            Step::VcToFvs => Problem::Fvs,
            Step::VcToIds => Problem::Ids,
            Step::VcToFas => Problem::Fas,
            Step::IsToMax2Sat => Problem::Max2Sat,
            Step::IsToSetPacking => Problem::SetPacking,
            Step::IsToMmvc { .. } => Problem::Mmvc,
            Step::IsToLcol { colors } => Problem::Lcol(colors),
            Step::IsToPlanar => Problem::Planar,
        }
    }

    pub fn name(self) -> String {
        match self {
            Step::VcToDs => "vc_to_ds".into(),
            Step::DsToSetCover => "ds_to_setcover".into(),
            Step::SetCoverToHittingSet => "setcover_to_hittingset".into(),
            Step::HittingSetToSetCover => "hittingset_to_setcover".into(),
            Step::VcToFvs => "vc_to_fvs".into(),
            Step::VcToIds => "vc_to_ids".into(),
            Step::VcToFas => "vc_to_fas".into(),
            Step::IsToMax2Sat => "is_to_max2sat".into(),
            Step::IsToSetPacking => "is_to_setpacking".into(),
            Step::IsToMmvc { t: Some(t) } => format!("is_to_mmvc(t={t})"),
            Step::IsToMmvc { t: None } => "is_to_mmvc(t=n+1)".into(),
            Step::IsToLcol { colors } => format!("is_to_lcol({colors})"),
            Step::IsToPlanar => "is_to_planar".into(),
        }
    }

    pub fn transfer(self) -> Transfer {
        match self {
            Step::IsToMax2Sat => Transfer::LoseEdgeClauses,
            Step::IsToMmvc { t } => Transfer::Pendant { t },
            Step::IsToLcol { colors } => Transfer::Scaled {
                factor: colors as f64,
            },
            Step::IsToPlanar => Transfer::Scaled {
                factor: PLANAR_COLORS as f64,
            },
            _ => Transfer::Identity,
        }
    }

    pub fn size_bound(self) -> &'static str {
        match self {
            Step::VcToDs | Step::VcToFvs => "n + 2m vertices, 5m edges",
            Step::VcToIds => "n + 2m vertices, 4m edges",
            Step::DsToSetCover => "n sets over n elements",
            Step::SetCoverToHittingSet | Step::HittingSetToSetCover => "|S| elements, |C| sets",
            Step::VcToFas => "2n vertices, n + 2m arcs",
            Step::IsToMax2Sat => "n variables, n + m clauses",
            Step::IsToSetPacking => "n sets over m elements",
            Step::IsToMmvc { .. } => "n(1 + t) vertices, m + nt edges",
            Step::IsToLcol { .. } | Step::IsToPlanar => "n vertices, m edges",
        }
    }

    fn graph<'a>(self, instance: &'a Instance) -> Result<&'a Graph> {
        instance.as_graph().ok_or_else(|| Error::InstanceMismatch {
            problem: self.source(),
            reason: format!(
                "{} expects a graph, got a {}",
                self.name(),
                instance.kind_name()
            ),
        })
    }

    fn forward(self, instance: &Instance) -> Result<(Instance, Option<GadgetMap>)> {
        Ok(match self {
            Step::VcToDs => split(vc_to_ds(self.graph(instance)?)?),
            Step::VcToFvs => split(vc_to_fvs(self.graph(instance)?)?),
            Step::VcToIds => split(vc_to_ids(self.graph(instance)?)?),
            Step::VcToFas => split(vc_to_fas(self.graph(instance)?)?),
            Step::DsToSetCover => (ds_to_setcover(self.graph(instance)?)?.into(), None),
            Step::SetCoverToHittingSet | Step::HittingSetToSetCover => {
                let s = instance
                    .as_set_system()
                    .ok_or_else(|| Error::InstanceMismatch {
                        problem: self.source(),
                        reason: format!("expects a set system, got a {}", instance.kind_name()),
                    })?;
                (setcover_to_hittingset(s).into(), None)
            }
            Step::IsToMax2Sat => (is_to_max2sat(self.graph(instance)?)?.into(), None),
            Step::IsToSetPacking => (is_to_setpacking(self.graph(instance)?)?.into(), None),
            Step::IsToMmvc { t } => {
                let g = self.graph(instance)?;
                split(is_to_mmvc(g, t.unwrap_or(g.n() + 1))?)
            }
            Step::IsToLcol { colors } => (is_to_lcol(self.graph(instance)?, colors)?.into(), None),
            Step::IsToPlanar => (is_to_planar(self.graph(instance)?).into(), None),
        })
    }

    fn backward(
        self,
        source: &Instance,
        gadget: Option<&GadgetMap>,
        target: &Candidate,
    ) -> Result<Candidate> {
        let indices = || target.payload.indices().unwrap_or(&[]);
        let map = || gadget.expect("gadget steps record their map");
        let out = match (self, &target.payload) {
            (Step::VcToDs | Step::VcToFvs | Step::VcToIds, _) => {
                dummy_swap_backward(map(), indices())?
            }
            (Step::VcToFas, Payload::Arcs(arcs)) => fas_backward(map(), arcs)?,
            (Step::DsToSetCover, _) => Candidate::vertices(Problem::Ds, indices().to_vec()),
            (Step::SetCoverToHittingSet, _) => {
                Candidate::sets(Problem::SetCover, indices().to_vec())
            }
            (Step::HittingSetToSetCover, _) => {
                Candidate::elements(Problem::HittingSet, indices().to_vec())
            }
            (Step::IsToMax2Sat, Payload::Assignment(a)) => {
                max2sat_backward(self.graph(source)?, a)?
            }
            (Step::IsToSetPacking, _) => Candidate::vertices(Problem::Is, indices().to_vec()),
            (Step::IsToMmvc { .. }, _) => mmvc_backward(map(), indices()),
            (Step::IsToLcol { colors }, _) => {
                lcol_backward(self.graph(source)?, indices(), colors)?
            }
            (Step::IsToPlanar, _) => planar_backward(self.graph(source)?, indices())?,
            _ => {
                return Err(Error::PayloadMismatch {
                    problem: self.target(),
                    expected: self.target().payload_kind().name(),
                })
            }
        };
        Ok(out)
    }

    /// The step taking `from` to `to`, if one exists. `t` sets the pendant
    /// count of the MMVC gadget.
    pub fn between(from: Problem, to: Problem, t: Option<usize>) -> Result<Step> {
        Ok(match (from, to) {
            (Problem::Vc, Problem::Ds) => Step::VcToDs,
            (Problem::Ds, Problem::SetCover) => Step::DsToSetCover,
            (Problem::SetCover, Problem::HittingSet) => Step::SetCoverToHittingSet,
            (Problem::HittingSet, Problem::SetCover) => Step::HittingSetToSetCover,
            (Problem::Vc, Problem::Fvs) => Step::VcToFvs,
            (Problem::Vc, Problem::Ids) => Step::VcToIds,
            (Problem::Vc, Problem::Fas) => Step::VcToFas,
            (Problem::Is, Problem::Max2Sat) => Step::IsToMax2Sat,
            (Problem::Is, Problem::SetPacking) => Step::IsToSetPacking,
            (Problem::Is, Problem::Mmvc) => Step::IsToMmvc { t },
            (Problem::Is, Problem::Lcol(colors)) => Step::IsToLcol { colors },
            (Problem::Is, Problem::Planar) => Step::IsToPlanar,
            _ => {
                return Err(Error::IncompatibleChain(format!(
                    "no reduction from {from} to {to}"
                )))
            }
        })
    }
}

fn split((g, map): (Graph, GadgetMap)) -> (Instance, Option<GadgetMap>) {
    (g.into(), Some(map))
}

/// A chain of elementary reductions, possibly empty (the identity).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reduction {
    pub source: Problem,
    pub target: Problem,
    pub steps: Vec<Step>,
}

/// An instance stage of a forward run: the instance a step started from and
/// the gadget bookkeeping it produced.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Stage {
    pub step: Step,
    pub source: Instance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gadget: Option<GadgetMap>,
}

/// Output of [`Reduction::forward`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reduced {
    pub instance: Instance,
    pub stages: Vec<Stage>,
}

impl Reduction {
    pub fn identity(problem: Problem) -> Self {
        Reduction {
            source: problem,
            target: problem,
            steps: Vec::new(),
        }
    }

    pub fn single(step: Step) -> Self {
        Reduction {
            source: step.source(),
            target: step.target(),
            steps: vec![step],
        }
    }

    pub fn between(from: Problem, to: Problem, t: Option<usize>) -> Result<Self> {
        Ok(Reduction::single(Step::between(from, to, t)?))
    }

    /// Parses `vc:ds,ds:setcover`.
    pub fn parse_chain(text: &str, t: Option<usize>) -> Result<Self> {
        let mut out: Option<Reduction> = None;
        for link in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = link.split_once(':').ok_or_else(|| {
                Error::IncompatibleChain(format!("expected FROM:TO, got {link:?}"))
            })?;
            let (from, to) = parse_pair(a, b)?;
            let next = Reduction::between(from, to, t)?;
            out = Some(match out {
                None => next,
                Some(prev) => compose(&prev, &next)?,
            });
        }
        out.ok_or_else(|| Error::IncompatibleChain("empty chain".into()))
    }

    pub fn name(&self) -> String {
        if self.steps.is_empty() {
            return format!("identity({})", self.source);
        }
        self.steps
            .iter()
            .map(|s| s.name())
            .collect::<Vec<_>>()
            .join(" then ")
    }

    pub fn transfer(&self) -> Transfer {
        self.steps
            .iter()
            .fold(Transfer::Identity, |acc, s| acc.then(s.transfer()))
    }

    /// Sizes of each stage, innermost last.
    pub fn size_bound(&self) -> String {
        if self.steps.is_empty() {
            return "unchanged".into();
        }
        self.steps
            .iter()
            .map(|s| s.size_bound())
            .collect::<Vec<_>>()
            .join(", of which ")
    }

    pub fn forward(&self, instance: &Instance) -> Result<Reduced> {
        let mut current = instance.clone();
        let mut stages = Vec::with_capacity(self.steps.len());
        for &step in &self.steps {
            let (next, gadget) = step.forward(&current)?;
            stages.push(Stage {
                step,
                source: current,
                gadget,
            });
            current = next;
        }
        Ok(Reduced {
            instance: current,
            stages,
        })
    }

    /// Maps a feasible target solution back to a solution of the source
    /// instance `reduced` was built from.
    pub fn backward(&self, reduced: &Reduced, target: &Candidate) -> Result<Candidate> {
        let verdict = validate(self.target, &reduced.instance, target)?;
        if !verdict.feasible {
            return Err(Error::InfeasibleCandidate(
                verdict.reason.unwrap_or_default(),
            ));
        }
        let mut current = target.clone();
        for stage in reduced.stages.iter().rev() {
            current = stage
                .step
                .backward(&stage.source, stage.gadget.as_ref(), &current)?;
        }
        Ok(current)
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} -> {})", self.name(), self.source, self.target)
    }
}

fn parse_pair(a: &str, b: &str) -> Result<(Problem, Problem)> {
    let from: Problem = a.trim().parse()?;
    // `is:lcol:3` splits as ("is", "lcol:3")
    let to: Problem = b.trim().parse()?;
    Ok((from, to))
}

/// `a` followed by `b`.
pub fn compose(a: &Reduction, b: &Reduction) -> Result<Reduction> {
    if a.target != b.source {
        return Err(Error::IncompatibleChain(format!(
            "{} ends at {} but {} starts at {}",
            a.name(),
            a.target,
            b.name(),
            b.source
        )));
    }
    let mut steps = a.steps.clone();
    steps.extend(&b.steps);
    Ok(Reduction {
        source: a.source,
        target: b.target,
        steps,
    })
}
