//! Reading and writing instances: DIMACS edge/arc graphs, DIMACS cnf and
//! wcnf formulas, a plain-text set-system format, and JSON.
//!
//! All text formats use 1-based ids on disk and 0-based ids in memory.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{CnfInstance, Instance, Literal, SetSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// `p edge n m` + `e u v` lines; `p arc n m` + `a u v` for digraphs.
    DimacsEdge,
    DimacsCnf,
    /// Unit weights only.
    DimacsWcnf,
    /// `p set |C| |S|` followed by one line of element ids per set.
    SetSystemText,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "dimacs-edge" | "dimacs" | "edge" | "col" => Format::DimacsEdge,
            "dimacs-cnf" | "cnf" => Format::DimacsCnf,
            "dimacs-wcnf" | "wcnf" => Format::DimacsWcnf,
            "setsystem-text" | "setsystem" | "sets" => Format::SetSystemText,
            "json" => Format::Json,
            _ => return Err(Error::UnknownFormat(s.to_string())),
        })
    }
}

impl Format {
    /// Guess from a file extension; unknown extensions read as DIMACS edge.
    pub fn from_path(path: &Path) -> Format {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("cnf") => Format::DimacsCnf,
            Some("wcnf") => Format::DimacsWcnf,
            Some("sets" | "ss" | "setsystem") => Format::SetSystemText,
            Some("json") => Format::Json,
            _ => Format::DimacsEdge,
        }
    }

    /// The natural text format for an instance.
    pub fn native(instance: &Instance) -> Format {
        match instance {
            Instance::Graph(_) => Format::DimacsEdge,
            Instance::SetSystem(_) => Format::SetSystemText,
            Instance::Cnf(_) => Format::DimacsCnf,
        }
    }
}

pub fn read_instance(path: &Path, format: Format) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_instance(&text, format, path)
}

pub fn write_instance(instance: &Instance, path: &Path, format: Format) -> Result<()> {
    let text = format_instance(instance, format)?;
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses `text`; `origin` only labels error messages.
pub fn parse_instance(text: &str, format: Format, origin: &Path) -> Result<Instance> {
    let p = Parser {
        origin: origin.to_path_buf(),
    };
    match format {
        Format::DimacsEdge => p.graph(text).map(Instance::Graph),
        Format::DimacsCnf => p.cnf(text, false).map(Instance::Cnf),
        Format::DimacsWcnf => p.cnf(text, true).map(Instance::Cnf),
        Format::SetSystemText => p.set_system(text).map(Instance::SetSystem),
        Format::Json => Ok(serde_json::from_str(text)?),
    }
}

pub fn format_instance(instance: &Instance, format: Format) -> Result<String> {
    let mut out = String::new();
    match (format, instance) {
        (Format::Json, _) => {
            out = serde_json::to_string_pretty(instance)?;
            out.push('\n');
        }
        (Format::DimacsEdge, Instance::Graph(g)) => {
            let (kind, tag) = if g.is_directed() {
                ("arc", 'a')
            } else {
                ("edge", 'e')
            };
            writeln!(out, "p {kind} {} {}", g.n(), g.m()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{tag} {} {}", u + 1, v + 1).unwrap();
            }
        }
        (Format::DimacsCnf | Format::DimacsWcnf, Instance::Cnf(c)) => {
            let weighted = format == Format::DimacsWcnf;
            let kind = if weighted { "wcnf" } else { "cnf" };
            writeln!(out, "p {kind} {} {}", c.num_vars(), c.clauses().len()).unwrap();
            for clause in c.clauses() {
                if weighted {
                    out.push_str("1 ");
                }
                for lit in clause {
                    write!(out, "{} ", lit.to_dimacs()).unwrap();
                }
                out.push_str("0\n");
            }
        }
        (Format::SetSystemText, Instance::SetSystem(s)) => {
            writeln!(out, "p set {} {}", s.ground(), s.len()).unwrap();
            for set in s.sets() {
                let line: Vec<String> = set.iter().map(|e| (e + 1).to_string()).collect();
                writeln!(out, "{}", line.join(" ")).unwrap();
            }
        }
        (f, inst) => {
            return Err(Error::UnknownFormat(format!(
                "{f:?} cannot encode a {}",
                inst.kind_name()
            )));
        }
    }
    Ok(out)
}

struct Parser {
    origin: PathBuf,
}

impl Parser {
    fn err(&self, line: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            path: self.origin.clone(),
            line,
            message: message.into(),
        }
    }

    fn num<T: FromStr>(&self, line: usize, tok: Option<&str>, what: &str) -> Result<T> {
        let tok = tok.ok_or_else(|| self.err(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| self.err(line, format!("bad {what} `{tok}`")))
    }

    fn header<'a>(
        &self,
        line: usize,
        rest: &'a str,
        kinds: &[&str],
    ) -> Result<(&'a str, Vec<&'a str>)> {
        let mut toks = rest.split_whitespace();
        let kind = toks
            .next()
            .ok_or_else(|| self.err(line, "empty problem line"))?;
        if !kinds.contains(&kind) {
            return Err(self.err(
                line,
                format!("expected `p {}`, found `p {kind}`", kinds.join("|")),
            ));
        }
        Ok((kind, toks.collect()))
    }

    fn graph(&self, text: &str) -> Result<Graph> {
        let mut header: Option<(bool, usize)> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                if header.is_some() {
                    return Err(self.err(ln, "duplicate problem line"));
                }
                let (kind, toks) = self.header(ln, rest, &["edge", "col", "arc"])?;
                if toks.len() != 2 {
                    return Err(self.err(ln, "problem line needs a vertex and an edge count"));
                }
                let n: usize = self.num(ln, Some(toks[0]), "vertex count")?;
                let _m: usize = self.num(ln, Some(toks[1]), "edge count")?;
                header = Some((kind == "arc", n));
                continue;
            }
            let (directed, n) = header.ok_or_else(|| self.err(ln, "edge before problem line"))?;
            let mut toks = line.split_whitespace();
            let tag = toks.next().unwrap_or_default();
            let expected = if directed { "a" } else { "e" };
            if tag != expected {
                return Err(self.err(ln, format!("expected `{expected}` line, found `{tag}`")));
            }
            let u: usize = self.num(ln, toks.next(), "endpoint")?;
            let v: usize = self.num(ln, toks.next(), "endpoint")?;
            if u == 0 || v == 0 || u > n || v > n {
                return Err(self.err(ln, format!("endpoint out of range 1..={n}")));
            }
            if u == v {
                return Err(self.err(ln, "self-loop"));
            }
            edges.push((u - 1, v - 1));
        }
        let (directed, n) = header.ok_or_else(|| self.err(0, "missing problem line"))?;
        if directed {
            Graph::from_arcs(n, edges)
        } else {
            Graph::from_edges(n, edges)
        }
    }

    fn cnf(&self, text: &str, weighted: bool) -> Result<CnfInstance> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses: Vec<Vec<Literal>> = Vec::new();
        let mut current: Vec<Literal> = Vec::new();
        let mut expect_weight = weighted;
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            last_line = ln;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                if header.is_some() {
                    return Err(self.err(ln, "duplicate problem line"));
                }
                let kind = if weighted { "wcnf" } else { "cnf" };
                let (_, toks) = self.header(ln, rest, &[kind])?;
                if toks.len() < 2 || toks.len() > 3 || (!weighted && toks.len() != 2) {
                    return Err(self.err(ln, "malformed problem line"));
                }
                let nv: usize = self.num(ln, Some(toks[0]), "variable count")?;
                let nc: usize = self.num(ln, Some(toks[1]), "clause count")?;
                if toks.len() == 3 {
                    let _top: u64 = self.num(ln, Some(toks[2]), "top weight")?;
                }
                header = Some((nv, nc));
                continue;
            }
            let (nv, _) = header.ok_or_else(|| self.err(ln, "clause before problem line"))?;
            for tok in line.split_whitespace() {
                if expect_weight {
                    let w: u64 = self.num(ln, Some(tok), "weight")?;
                    if w != 1 {
                        return Err(
                            self.err(ln, format!("weight {w}: only unit weights are supported"))
                        );
                    }
                    expect_weight = false;
                    continue;
                }
                let x: i64 = self.num(ln, Some(tok), "literal")?;
                match Literal::from_dimacs(x) {
                    None => {
                        let clause = std::mem::take(&mut current);
                        if let Some(j) = clause
                            .iter()
                            .enumerate()
                            .position(|(j, l)| clause[..j].iter().any(|o| o.var == l.var))
                        {
                            return Err(self.err(
                                ln,
                                format!("variable {} repeated in clause", clause[j].var + 1),
                            ));
                        }
                        clauses.push(clause);
                        expect_weight = weighted;
                    }
                    Some(lit) => {
                        if lit.var >= nv {
                            return Err(self.err(
                                ln,
                                format!("variable {} out of range 1..={nv}", lit.var + 1),
                            ));
                        }
                        current.push(lit);
                    }
                }
            }
        }
        let (nv, nc) = header.ok_or_else(|| self.err(0, "missing problem line"))?;
        if !current.is_empty() {
            return Err(self.err(last_line, "last clause not terminated by 0"));
        }
        if clauses.len() != nc {
            return Err(self.err(
                last_line,
                format!("header declares {nc} clauses, found {}", clauses.len()),
            ));
        }
        CnfInstance::new(nv, clauses)
    }

    fn set_system(&self, text: &str) -> Result<SetSystem> {
        let mut lines = text.lines().enumerate();
        let (ground, count) = loop {
            let (i, raw) = lines
                .next()
                .ok_or_else(|| self.err(0, "missing problem line"))?;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let rest = line
                .strip_prefix('p')
                .ok_or_else(|| self.err(i + 1, "expected `p set` line"))?;
            let (_, toks) = self.header(i + 1, rest, &["set"])?;
            if toks.len() != 2 {
                return Err(self.err(i + 1, "problem line needs a ground size and a set count"));
            }
            break (
                self.num::<usize>(i + 1, Some(toks[0]), "ground size")?,
                self.num::<usize>(i + 1, Some(toks[1]), "set count")?,
            );
        };
        let mut sets = Vec::with_capacity(count);
        for (i, raw) in lines {
            let ln = i + 1;
            let line = raw.trim();
            if line.starts_with('c') {
                continue;
            }
            if sets.len() == count {
                if line.is_empty() {
                    continue;
                }
                return Err(self.err(ln, format!("more than {count} sets")));
            }
            let mut set = Vec::new();
            for tok in line.split_whitespace() {
                let e: usize = self.num(ln, Some(tok), "element")?;
                if e == 0 || e > ground {
                    return Err(self.err(ln, format!("element {e} out of range 1..={ground}")));
                }
                set.push(e - 1);
            }
            sets.push(set);
        }
        if sets.len() != count {
            return Err(self.err(
                text.lines().count(),
                format!("header declares {count} sets, found {}", sets.len()),
            ));
        }
        SetSystem::new(ground, sets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str, f: Format) -> Result<Instance> {
        parse_instance(text, f, Path::new("<test>"))
    }

    #[test]
    fn dimacs_triangle() {
        let g = parse(
            "c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n",
            Format::DimacsEdge,
        )
        .unwrap();
        assert_eq!(g, Instance::Graph(Graph::complete(3)));
    }

    #[test]
    fn dimacs_errors_carry_line_numbers() {
        let e = parse("p edge 3\ne 1 2\n", Format::DimacsEdge).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");
        let e = parse("e 1 2\n", Format::DimacsEdge).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse("p edge 3 1\ne 1 4\n", Format::DimacsEdge).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse("p graph 3 1\n", Format::DimacsEdge).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse("p edge 3 1\ne 2 2\n", Format::DimacsEdge).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn arcs_round_trip() {
        let g = Graph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let text = format_instance(&Instance::Graph(g.clone()), Format::DimacsEdge).unwrap();
        assert!(text.starts_with("p arc 3 3\n"));
        assert_eq!(
            parse(&text, Format::DimacsEdge).unwrap(),
            Instance::Graph(g)
        );
    }

    #[test]
    fn dimacs_cnf() {
        let c = parse("p cnf 2 2\n1 -2 0\n2 0\n", Format::DimacsCnf).unwrap();
        let c = c.as_cnf().unwrap();
        assert_eq!(c.num_vars(), 2);
        assert_eq!(c.clauses().len(), 2);
        assert_eq!(c.clauses()[0], vec![Literal::pos(0), Literal::neg(1)]);
    }

    #[test]
    fn cnf_errors() {
        assert!(parse("p cnf 2 2\n1 -2 0\n", Format::DimacsCnf).is_err());
        assert!(parse("p cnf 2 1\n1 3 0\n", Format::DimacsCnf).is_err());
        assert!(parse("p cnf 2 1\n1 -1 0\n", Format::DimacsCnf).is_err());
        assert!(parse("p cnf 2 1\n1 2\n", Format::DimacsCnf).is_err());
    }

    #[test]
    fn wcnf_unit_weights_only() {
        let c = parse("p wcnf 2 2 10\n1 1 -2 0\n1 2 0\n", Format::DimacsWcnf).unwrap();
        assert_eq!(c.as_cnf().unwrap().clauses().len(), 2);
        let text = format_instance(&c, Format::DimacsWcnf).unwrap();
        assert_eq!(parse(&text, Format::DimacsWcnf).unwrap(), c);
        assert!(parse("p wcnf 2 1\n3 1 2 0\n", Format::DimacsWcnf).is_err());
    }

    #[test]
    fn set_system_text_keeps_empty_sets() {
        let s = SetSystem::new(3, vec![vec![0, 2], vec![], vec![1]]).unwrap();
        let inst = Instance::SetSystem(s);
        let text = format_instance(&inst, Format::SetSystemText).unwrap();
        assert_eq!(text, "p set 3 3\n1 3\n\n2\n");
        assert_eq!(parse(&text, Format::SetSystemText).unwrap(), inst);
        assert!(parse("p set 2 1\n3\n", Format::SetSystemText).is_err());
        assert!(parse("p set 2 2\n1\n", Format::SetSystemText).is_err());
    }

    #[test]
    fn files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        for (inst, f, name) in [
            (
                Instance::Graph(Graph::complete(3)),
                Format::DimacsEdge,
                "k3.col",
            ),
            (Instance::Graph(Graph::petersen()), Format::Json, "p.json"),
        ] {
            let path = dir.path().join(name);
            write_instance(&inst, &path, f).unwrap();
            assert_eq!(Format::from_path(&path), f);
            assert_eq!(read_instance(&path, f).unwrap(), inst);
        }
        let missing = read_instance(&dir.path().join("nope.col"), Format::DimacsEdge);
        assert!(matches!(missing, Err(Error::Io { .. })));
    }

    #[test]
    fn wrong_format_for_instance() {
        assert!(format_instance(&Instance::Graph(Graph::empty(2)), Format::DimacsCnf).is_err());
    }
}
