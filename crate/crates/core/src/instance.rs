//! Problem tags, the non-graph instance types, and the uniform solution
//! carrier [`Candidate`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Every optimization problem the crate can validate and solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    /// Max independent set.
    Is,
    /// Min vertex cover.
    Vc,
    /// Min dominating set.
    Ds,
    /// Min independent dominating set.
    Ids,
    /// Min feedback vertex set.
    Fvs,
    /// Max minimal vertex cover.
    Mmvc,
    SetCover,
    HittingSet,
    SetPacking,
    Max2Sat,
    Max3Sat,
    /// Min feedback arc set (directed graphs).
    Fas,
    /// Max induced subgraph colorable with the given number of colors.
    Lcol(usize),
    /// Max induced planar subgraph.
    Planar,
}

/// Shape of a solution for a given [`Problem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PayloadKind {
    Vertices,
    Sets,
    Elements,
    Arcs,
    Assignment,
}

impl PayloadKind {
    pub fn name(self) -> &'static str {
        match self {
            PayloadKind::Vertices => "vertex set",
            PayloadKind::Sets => "set-index set",
            PayloadKind::Elements => "element set",
            PayloadKind::Arcs => "arc set",
            PayloadKind::Assignment => "assignment",
        }
    }
}

impl Problem {
    pub fn payload_kind(self) -> PayloadKind {
        match self {
            Problem::SetCover | Problem::SetPacking => PayloadKind::Sets,
            Problem::HittingSet => PayloadKind::Elements,
            Problem::Fas => PayloadKind::Arcs,
            Problem::Max2Sat | Problem::Max3Sat => PayloadKind::Assignment,
            _ => PayloadKind::Vertices,
        }
    }

    pub fn is_maximization(self) -> bool {
        matches!(
            self,
            Problem::Is
                | Problem::Mmvc
                | Problem::SetPacking
                | Problem::Max2Sat
                | Problem::Max3Sat
                | Problem::Lcol(_)
                | Problem::Planar
        )
    }

    /// Whether the problem is posed on a graph (as opposed to a set system or
    /// a formula).
    pub fn on_graph(self) -> bool {
        !matches!(
            self,
            Problem::SetCover
                | Problem::HittingSet
                | Problem::SetPacking
                | Problem::Max2Sat
                | Problem::Max3Sat
        )
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Problem::Is => "is",
            Problem::Vc => "vc",
            Problem::Ds => "ds",
            Problem::Ids => "ids",
            Problem::Fvs => "fvs",
            Problem::Mmvc => "mmvc",
            Problem::SetCover => "setcover",
            Problem::HittingSet => "hittingset",
            Problem::SetPacking => "setpacking",
            Problem::Max2Sat => "max2sat",
            Problem::Max3Sat => "max3sat",
            Problem::Fas => "fas",
            Problem::Lcol(l) => return write!(f, "lcol:{l}"),
            Problem::Planar => "planar",
        };
        f.write_str(name)
    }
}

impl FromStr for Problem {
    type Err = Error;

    /// Accepts the short names printed by `Display` as well as the long
    /// hyphenated forms (`SET-COVER`, `MAX-2-SAT`, `LCOL-SUBGRAPH:3`, ...).
    fn from_str(s: &str) -> Result<Self> {
        let (head, colors) = match s.split_once(':') {
            Some((h, c)) => (h, Some(c)),
            None => (s, None),
        };
        let key: String = head
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        let p = match key.as_str() {
            "is" | "mis" => Problem::Is,
            "vc" => Problem::Vc,
            "ds" => Problem::Ds,
            "ids" => Problem::Ids,
            "fvs" => Problem::Fvs,
            "mmvc" => Problem::Mmvc,
            "setcover" | "sc" => Problem::SetCover,
            "hittingset" | "hs" => Problem::HittingSet,
            "setpacking" | "sp" => Problem::SetPacking,
            "max2sat" => Problem::Max2Sat,
            "max3sat" => Problem::Max3Sat,
            "fas" => Problem::Fas,
            "planar" | "planarsubgraph" | "ps" => Problem::Planar,
            "lcol" | "lcolsubgraph" => {
                let c = colors.ok_or(Error::MissingColors)?;
                let l = c
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::UnknownTag(s.to_string()))?;
                if l == 0 {
                    return Err(Error::OutOfRange("lcol needs at least one color".into()));
                }
                return Ok(Problem::Lcol(l));
            }
            _ => return Err(Error::UnknownTag(s.to_string())),
        };
        if colors.is_some() {
            return Err(Error::UnknownTag(s.to_string()));
        }
        Ok(p)
    }
}

impl Serialize for Problem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Problem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A family of subsets over the ground set `0..ground`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SetSystemRepr", into = "SetSystemRepr")]
pub struct SetSystem {
    ground: usize,
    sets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SetSystemRepr {
    ground: usize,
    sets: Vec<Vec<usize>>,
}

impl TryFrom<SetSystemRepr> for SetSystem {
    type Error = Error;
    fn try_from(r: SetSystemRepr) -> Result<Self> {
        SetSystem::new(r.ground, r.sets)
    }
}

impl From<SetSystem> for SetSystemRepr {
    fn from(s: SetSystem) -> Self {
        SetSystemRepr {
            ground: s.ground,
            sets: s.sets,
        }
    }
}

impl SetSystem {
    /// Sets are sorted and de-duplicated; any element `>= ground` is an error.
    pub fn new(ground: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut sets = sets;
        for (i, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(&e) = set.last() {
                if e >= ground {
                    return Err(Error::InvalidSetSystem(format!(
                        "set {i} contains element {e} >= {ground}"
                    )));
                }
            }
        }
        Ok(SetSystem { ground, sets })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// For every element, the indices of the sets containing it.
    pub fn memberships(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.ground];
        for (i, set) in self.sets.iter().enumerate() {
            for &e in set {
                out[e].push(i);
            }
        }
        out
    }

    /// Largest number of sets any single element belongs to.
    pub fn frequency(&self) -> usize {
        self.memberships().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The transposed system: element `j` of the result is set `j` of `self`,
    /// and set `i` of the result lists the sets of `self` containing `i`.
    pub fn dual(&self) -> SetSystem {
        SetSystem {
            ground: self.sets.len(),
            sets: self.memberships(),
        }
    }
}

/// A literal over variables `0..num_vars`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    /// DIMACS encoding: `var + 1`, negated for negative literals.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn from_dimacs(x: i64) -> Option<Self> {
        (x != 0).then(|| Literal {
            var: (x.unsigned_abs() - 1) as usize,
            positive: x > 0,
        })
    }

    #[inline]
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl TryFrom<i64> for Literal {
    type Error = String;
    fn try_from(x: i64) -> std::result::Result<Self, String> {
        Literal::from_dimacs(x).ok_or_else(|| "literal 0 is not allowed".to_string())
    }
}

impl From<Literal> for i64 {
    fn from(l: Literal) -> i64 {
        l.to_dimacs()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CnfRepr", into = "CnfRepr")]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

#[derive(Serialize, Deserialize)]
struct CnfRepr {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl TryFrom<CnfRepr> for CnfInstance {
    type Error = Error;
    fn try_from(r: CnfRepr) -> Result<Self> {
        CnfInstance::new(r.num_vars, r.clauses)
    }
}

impl From<CnfInstance> for CnfRepr {
    fn from(c: CnfInstance) -> Self {
        CnfRepr {
            num_vars: c.num_vars,
            clauses: c.clauses,
        }
    }
}

impl CnfInstance {
    /// Rejects clauses mentioning a variable twice and out-of-range variables.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        for (i, clause) in clauses.iter().enumerate() {
            for (j, lit) in clause.iter().enumerate() {
                if lit.var >= num_vars {
                    return Err(Error::InvalidCnf(format!(
                        "clause {i}: variable {} out of range",
                        lit.var + 1
                    )));
                }
                if clause[..j].iter().any(|o| o.var == lit.var) {
                    return Err(Error::InvalidCnf(format!(
                        "clause {i}: variable {} repeated",
                        lit.var + 1
                    )));
                }
            }
        }
        Ok(CnfInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn max_width(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn satisfied(&self, assignment: &[bool]) -> usize {
        self.clauses
            .iter()
            .filter(|c| c.iter().any(|l| l.eval(assignment)))
            .count()
    }
}

/// Any instance the crate knows how to read, write, validate and solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Instance {
    Graph(Graph),
    SetSystem(SetSystem),
    Cnf(CnfInstance),
}

impl Instance {
    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            Instance::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_set_system(&self) -> Option<&SetSystem> {
        match self {
            Instance::SetSystem(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_cnf(&self) -> Option<&CnfInstance> {
        match self {
            Instance::Cnf(c) => Some(c),
            _ => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Instance::Graph(g) if g.is_directed() => "directed graph",
            Instance::Graph(_) => "graph",
            Instance::SetSystem(_) => "set system",
            Instance::Cnf(_) => "CNF formula",
        }
    }
}

impl From<Graph> for Instance {
    fn from(g: Graph) -> Self {
        Instance::Graph(g)
    }
}

impl From<SetSystem> for Instance {
    fn from(s: SetSystem) -> Self {
        Instance::SetSystem(s)
    }
}

impl From<CnfInstance> for Instance {
    fn from(c: CnfInstance) -> Self {
        Instance::Cnf(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Vertices(Vec<usize>),
    Sets(Vec<usize>),
    Elements(Vec<usize>),
    Arcs(Vec<(usize, usize)>),
    Assignment(Vec<bool>),
}

impl Payload {
    pub fn kind(&self) -> PayloadKind {
        match self {
            Payload::Vertices(_) => PayloadKind::Vertices,
            Payload::Sets(_) => PayloadKind::Sets,
            Payload::Elements(_) => PayloadKind::Elements,
            Payload::Arcs(_) => PayloadKind::Arcs,
            Payload::Assignment(_) => PayloadKind::Assignment,
        }
    }

    /// The index list for set-like payloads; `None` for arcs and assignments.
    pub fn indices(&self) -> Option<&[usize]> {
        match self {
            Payload::Vertices(v) | Payload::Sets(v) | Payload::Elements(v) => Some(v),
            _ => None,
        }
    }
}

/// A solution for one problem: the payload plus its objective value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub problem: Problem,
    pub payload: Payload,
    pub value: usize,
}

impl Candidate {
    /// A vertex-set candidate; sorts and de-duplicates, value = cardinality.
    pub fn vertices(problem: Problem, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let value = vertices.len();
        Candidate {
            problem,
            payload: Payload::Vertices(vertices),
            value,
        }
    }

    pub fn sets(problem: Problem, mut sets: Vec<usize>) -> Self {
        sets.sort_unstable();
        sets.dedup();
        let value = sets.len();
        Candidate {
            problem,
            payload: Payload::Sets(sets),
            value,
        }
    }

    pub fn elements(problem: Problem, mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let value = elements.len();
        Candidate {
            problem,
            payload: Payload::Elements(elements),
            value,
        }
    }

    pub fn arcs(problem: Problem, mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        let value = arcs.len();
        Candidate {
            problem,
            payload: Payload::Arcs(arcs),
            value,
        }
    }

    pub fn assignment(problem: Problem, cnf: &CnfInstance, assignment: Vec<bool>) -> Self {
        let value = cnf.satisfied(&assignment);
        Candidate {
            problem,
            payload: Payload::Assignment(assignment),
            value,
        }
    }

    /// The vertex payload, if this candidate carries one.
    pub fn vertex_set(&self) -> Option<&[usize]> {
        match &self.payload {
            Payload::Vertices(v) => Some(v),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for p in [
            Problem::Is,
            Problem::Vc,
            Problem::Ds,
            Problem::Ids,
            Problem::Fvs,
            Problem::Mmvc,
            Problem::SetCover,
            Problem::HittingSet,
            Problem::SetPacking,
            Problem::Max2Sat,
            Problem::Max3Sat,
            Problem::Fas,
            Problem::Lcol(3),
            Problem::Planar,
        ] {
            assert_eq!(p.to_string().parse::<Problem>().unwrap(), p);
        }
        assert_eq!("SET-COVER".parse::<Problem>().unwrap(), Problem::SetCover);
        assert_eq!("MAX-3-SAT".parse::<Problem>().unwrap(), Problem::Max3Sat);
        assert_eq!(
            "LCOL-SUBGRAPH:2".parse::<Problem>().unwrap(),
            Problem::Lcol(2)
        );
    }

    #[test]
    fn tag_errors() {
        assert!(matches!(
            "knapsack".parse::<Problem>(),
            Err(Error::UnknownTag(_))
        ));
        assert!(matches!(
            "lcol".parse::<Problem>(),
            Err(Error::MissingColors)
        ));
        assert!(matches!(
            "LCOL-SUBGRAPH".parse::<Problem>(),
            Err(Error::MissingColors)
        ));
    }

    #[test]
    fn set_system_frequency_and_dual() {
        let s = SetSystem::new(3, vec![vec![0, 1], vec![1, 2], vec![1]]).unwrap();
        assert_eq!(s.frequency(), 3);
        let d = s.dual();
        assert_eq!(d.ground(), 3);
        assert_eq!(d.sets(), &[vec![0], vec![0, 1, 2], vec![1]]);
        assert_eq!(d.dual(), s);
        assert!(SetSystem::new(2, vec![vec![2]]).is_err());
    }

    #[test]
    fn cnf_checks() {
        assert!(CnfInstance::new(2, vec![vec![Literal::pos(0), Literal::neg(0)]]).is_err());
        assert!(CnfInstance::new(1, vec![vec![Literal::pos(1)]]).is_err());
        let c = CnfInstance::new(
            2,
            vec![
                vec![Literal::pos(0), Literal::neg(1)],
                vec![Literal::pos(1)],
            ],
        )
        .unwrap();
        assert_eq!(c.satisfied(&[false, false]), 1);
        assert_eq!(c.satisfied(&[true, true]), 2);
    }

    #[test]
    fn candidate_json() {
        let c = Candidate::vertices(Problem::Lcol(3), vec![2, 0, 2]);
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(
            text,
            r#"{"problem":"lcol:3","payload":{"vertices":[0,2]},"value":2}"#
        );
        assert_eq!(serde_json::from_str::<Candidate>(&text).unwrap(), c);
    }
}
