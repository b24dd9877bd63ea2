//! Named graph families and their textual form.
//!
//! Labeling conventions:
//! * paths and cycles run `0, 1, ..., n-1` in order;
//! * `CompleteBipartite(m, n)` puts the `m`-side first;
//! * wheels and broken wheels have the hub at 0 and the rim `1..=k` in
//!   cyclic order, the broken wheel missing rim edge `1 k`;
//! * theta graphs put the two end vertices at 0 and 1, followed by the
//!   internal vertices of each path in turn;
//! * a tree of cycles numbers the root cycle `0..a_1` and appends the fresh
//!   vertices of each attached cycle in attachment order. A cycle attached
//!   to parent edge `xy` runs `y, x, w_1, ..., w_{a-2}` so the shared edge
//!   is its local edge 0;
//! * a path of cycles attaches cycle `i + 1` to local edge `floor(a_i / 2)`
//!   of cycle `i`, the edge farthest from the one cycle `i` shares with its
//!   predecessor.

use std::fmt;
use std::str::FromStr;

use super::{cartesian_product, graph_power, Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    BrokenWheel(usize),
    Theta(usize, usize, usize),
    GeneralizedTheta(Vec<usize>),
    CartesianProduct(Box<FamilySpec>, Box<FamilySpec>),
    Power(Box<FamilySpec>, usize),
    PathOfCycles(Vec<usize>),
    TreeOfCycles { root: usize, attachments: Vec<TreeOfCyclesAttachment> },
}

/// Cycle number `i + 1` of a tree of cycles, glued onto an edge of an
/// earlier cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TreeOfCyclesAttachment {
    /// Index of the parent cycle (0 is the root cycle).
    pub parent: usize,
    /// Local edge index on the parent cycle.
    pub edge: usize,
    pub length: usize,
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidFamily(msg.into())
}

fn capacity(order: usize) -> Result<(), GraphError> {
    if order > MAX_ORDER {
        Err(GraphError::Capacity { order, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph, GraphError> {
        match self {
            FamilySpec::Path(n) => {
                if *n == 0 {
                    return Err(invalid("path needs at least one vertex"));
                }
                capacity(*n)?;
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(*n, &edges)
            }
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle needs at least three vertices"));
                }
                capacity(*n)?;
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(*n, &edges)
            }
            FamilySpec::Complete(n) => {
                if *n == 0 {
                    return Err(invalid("complete graph needs at least one vertex"));
                }
                Graph::complete(*n)
            }
            FamilySpec::CompleteBipartite(m, n) => {
                if *m == 0 || *n == 0 {
                    return Err(invalid("complete bipartite sides must be nonempty"));
                }
                capacity(m + n)?;
                let edges: Vec<_> = (0..*m).flat_map(|a| (0..*n).map(move |b| (a, m + b))).collect();
                Graph::from_edges(m + n, &edges)
            }
            FamilySpec::Wheel(k) | FamilySpec::BrokenWheel(k) => {
                if *k < 3 {
                    return Err(invalid("wheels need k >= 3"));
                }
                capacity(k + 1)?;
                let mut edges: Vec<_> = (1..=*k).map(|i| (0, i)).collect();
                edges.extend((1..*k).map(|i| (i, i + 1)));
                if matches!(self, FamilySpec::Wheel(_)) {
                    edges.push((*k, 1));
                }
                Graph::from_edges(k + 1, &edges)
            }
            FamilySpec::Theta(a, b, c) => theta(&[*a, *b, *c]),
            FamilySpec::GeneralizedTheta(parts) => {
                if parts.len() < 2 {
                    return Err(invalid("generalized theta needs at least two paths"));
                }
                theta(parts)
            }
            FamilySpec::CartesianProduct(a, b) => cartesian_product(&a.generate()?, &b.generate()?),
            FamilySpec::Power(inner, k) => {
                if *k == 0 {
                    return Err(invalid("graph power exponent must be positive"));
                }
                Ok(graph_power(&inner.generate()?, *k))
            }
            FamilySpec::PathOfCycles(lengths) => {
                let (root, attachments) = path_attachments(lengths)?;
                tree_of_cycles(root, &attachments)
            }
            FamilySpec::TreeOfCycles { root, attachments } => tree_of_cycles(*root, attachments),
        }
    }

    /// Cycle lengths of a path or tree of cycles, root first.
    pub fn cycle_lengths(&self) -> Option<Vec<usize>> {
        match self {
            FamilySpec::PathOfCycles(lengths) => Some(lengths.clone()),
            FamilySpec::TreeOfCycles { root, attachments } => {
                Some(std::iter::once(*root).chain(attachments.iter().map(|a| a.length)).collect())
            }
            _ => None,
        }
    }
}

fn theta(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.iter().filter(|&&p| p == 0).count() > 1 {
        return Err(invalid("theta graph allows at most one empty path"));
    }
    let order = 2 + parts.iter().sum::<usize>();
    capacity(order)?;
    let mut g = Graph::empty(order)?;
    let mut next = 2;
    for &p in parts {
        let mut prev = 0;
        for _ in 0..p {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1)?;
    }
    Ok(g)
}

fn path_attachments(lengths: &[usize]) -> Result<(usize, Vec<TreeOfCyclesAttachment>), GraphError> {
    let (&root, rest) = lengths.split_first().ok_or_else(|| invalid("path of cycles needs a cycle"))?;
    let mut attachments = Vec::with_capacity(rest.len());
    let mut prev = root;
    for (i, &length) in rest.iter().enumerate() {
        attachments.push(TreeOfCyclesAttachment { parent: i, edge: prev / 2, length });
        prev = length;
    }
    Ok((root, attachments))
}

fn tree_of_cycles(root: usize, attachments: &[TreeOfCyclesAttachment]) -> Result<Graph, GraphError> {
    if root < 4 || attachments.iter().any(|a| a.length < 4) {
        return Err(invalid("cycles of a tree of cycles need length >= 4"));
    }
    let order = root + attachments.iter().map(|a| a.length - 2).sum::<usize>();
    capacity(order)?;
    let mut g = Graph::empty(order)?;
    // local vertex order of each cycle, and the vertices already on a shared edge
    let mut cycles: Vec<Vec<usize>> = vec![(0..root).collect()];
    let mut shared = 0u32;
    let mut next = root;
    for (i, a) in attachments.iter().enumerate() {
        let parent = cycles
            .get(a.parent)
            .ok_or_else(|| invalid(format!("cycle {} attaches to unknown cycle {}", i + 1, a.parent)))?;
        if a.edge >= parent.len() {
            return Err(invalid(format!("cycle {} has no edge {}", a.parent, a.edge)));
        }
        let x = parent[a.edge];
        let y = parent[(a.edge + 1) % parent.len()];
        if shared & ((1 << x) | (1 << y)) != 0 {
            return Err(invalid(format!("edge {} of cycle {} touches an already shared edge", a.edge, a.parent)));
        }
        shared |= (1 << x) | (1 << y);
        let mut local = vec![y, x];
        local.extend(next..next + a.length - 2);
        next += a.length - 2;
        cycles.push(local);
    }
    for cycle in &cycles {
        for j in 0..cycle.len() {
            g.add_edge(cycle[j], cycle[(j + 1) % cycle.len()])?;
        }
    }
    Ok(g)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(v: &[usize]) -> String {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            FamilySpec::Wheel(k) => write!(f, "wheel:{k}"),
            FamilySpec::BrokenWheel(k) => write!(f, "brokenwheel:{k}"),
            FamilySpec::Theta(a, b, c) => write!(f, "theta:{a},{b},{c}"),
            FamilySpec::GeneralizedTheta(parts) => write!(f, "gtheta:{}", list(parts)),
            FamilySpec::CartesianProduct(a, b) => write!(f, "product:{a},{b}"),
            FamilySpec::Power(inner, k) => write!(f, "power:{inner},{k}"),
            FamilySpec::PathOfCycles(lengths) => write!(f, "pathcycles:{}", list(lengths)),
            FamilySpec::TreeOfCycles { root, attachments } => {
                write!(f, "treecycles:{root}")?;
                for a in attachments {
                    write!(f, ",{}@{}.{}", a.length, a.parent, a.edge)?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses forms such as `wheel:4`, `theta:1,1,2`, `pathcycles:4,5,4`,
    /// `product:path:2,path:3`, `power:path:5,2` and
    /// `treecycles:6,4@0.0,4@0.2` (cycle `length@parent.edge`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.trim().as_bytes(), pos: 0 };
        let spec = p.spec()?;
        if p.pos != p.s.len() {
            return Err(invalid(format!("unexpected trailing text in {s:?}")));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), GraphError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(invalid(format!("expected '{}' at offset {}", c as char, self.pos)))
        }
    }

    fn int(&mut self) -> Result<usize, GraphError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(invalid(format!("expected a number at offset {start}")));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| invalid("number out of range"))
    }

    fn ints(&mut self, exact: Option<usize>) -> Result<Vec<usize>, GraphError> {
        let mut v = vec![self.int()?];
        // keep consuming ",<digit>" so a variable-length list can be followed
        // by another family spec inside a product
        while exact.is_none_or(|e| v.len() < e)
            && self.peek() == Some(b',')
            && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit())
        {
            self.pos += 1;
            v.push(self.int()?);
        }
        if let Some(e) = exact {
            if v.len() != e {
                return Err(invalid(format!("expected {e} numbers")));
            }
        }
        Ok(v)
    }

    fn spec(&mut self) -> Result<FamilySpec, GraphError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_ascii_lowercase();
        self.expect(b':')?;
        Ok(match name.as_str() {
            "path" => FamilySpec::Path(self.int()?),
            "cycle" => FamilySpec::Cycle(self.int()?),
            "complete" => FamilySpec::Complete(self.int()?),
            "bipartite" => {
                let v = self.ints(Some(2))?;
                FamilySpec::CompleteBipartite(v[0], v[1])
            }
            "wheel" => FamilySpec::Wheel(self.int()?),
            "brokenwheel" | "fan" => FamilySpec::BrokenWheel(self.int()?),
            "theta" => {
                let v = self.ints(Some(3))?;
                FamilySpec::Theta(v[0], v[1], v[2])
            }
            "gtheta" => FamilySpec::GeneralizedTheta(self.ints(None)?),
            "pathcycles" => FamilySpec::PathOfCycles(self.ints(None)?),
            "product" => {
                let a = self.spec()?;
                self.expect(b',')?;
                let b = self.spec()?;
                FamilySpec::CartesianProduct(Box::new(a), Box::new(b))
            }
            "power" => {
                let inner = self.spec()?;
                self.expect(b',')?;
                FamilySpec::Power(Box::new(inner), self.int()?)
            }
            "treecycles" => {
                let root = self.int()?;
                let mut attachments = Vec::new();
                while self.peek() == Some(b',') && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                    let length = self.int()?;
                    self.expect(b'@')?;
                    let parent = self.int()?;
                    self.expect(b'.')?;
                    let edge = self.int()?;
                    attachments.push(TreeOfCyclesAttachment { parent, edge, length });
                }
                FamilySpec::TreeOfCycles { root, attachments }
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        })
    }
}
