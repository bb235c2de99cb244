//! Deterministic generators for the graph families used in constructions,
//! separations, and benchmarks, plus edge subdivision.
//!
//! Vertex ids are assigned in a fixed order (named vertices first, in
//! lexicographic role order) so generated graphs are byte-reproducible.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("family parameter must be positive: {0}")]
    NonPositiveParam(&'static str),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// A graph family together with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Star K_{1,n}.
    Star { n: usize },
    /// Path on n vertices plus an apex adjacent to the whole path.
    Fan { n: usize },
    /// n x n grid.
    Grid { n: usize },
    /// n-grid with every second horizontal edge removed in a brick pattern.
    Wall { n: usize },
    /// S_{k,n}: star K_{1,n} with each edge replaced by k internally
    /// vertex-disjoint paths of length 2.
    S { k: usize, n: usize },
    /// G^n_k: vertices a_1..a_n plus k copies of each 2-subset of them,
    /// each copy adjacent to the two vertices of its subset.
    Gnk { n: usize, k: usize },
    /// Path on n vertices with each edge replaced by n internally
    /// vertex-disjoint paths of length 2.
    ThickPath { n: usize },
    /// Thickened n-star, S_{n,n}.
    ThickStar { n: usize },
}

impl FamilySpec {
    pub fn parse(name: &str, n: Option<usize>, k: Option<usize>) -> Result<FamilySpec, FamilyError> {
        let need_n = || n.ok_or(FamilyError::NonPositiveParam("n"));
        let spec = match name {
            "star" => FamilySpec::Star { n: need_n()? },
            "fan" => FamilySpec::Fan { n: need_n()? },
            "grid" => FamilySpec::Grid { n: need_n()? },
            "wall" => FamilySpec::Wall { n: need_n()? },
            "S" | "s" => FamilySpec::S { k: k.ok_or(FamilyError::NonPositiveParam("k"))?, n: need_n()? },
            "Gnk" | "gnk" => FamilySpec::Gnk { n: need_n()?, k: k.ok_or(FamilyError::NonPositiveParam("k"))? },
            "thick_path" => FamilySpec::ThickPath { n: need_n()? },
            "thick_star" => FamilySpec::ThickStar { n: need_n()? },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        Ok(spec)
    }

    pub fn describe(&self) -> String {
        match self {
            FamilySpec::Star { n } => format!("star n={n}"),
            FamilySpec::Fan { n } => format!("fan n={n}"),
            FamilySpec::Grid { n } => format!("grid n={n}"),
            FamilySpec::Wall { n } => format!("wall n={n}"),
            FamilySpec::S { k, n } => format!("S k={k} n={n}"),
            FamilySpec::Gnk { n, k } => format!("Gnk n={n} k={k}"),
            FamilySpec::ThickPath { n } => format!("thick_path n={n}"),
            FamilySpec::ThickStar { n } => format!("thick_star n={n}"),
        }
    }
}

/// Role labels exposing the named vertices of a generated graph.
#[derive(Debug, Clone, Default)]
pub struct Roles {
    labels: BTreeMap<String, usize>,
}

impl Roles {
    fn set(&mut self, name: String, v: usize) {
        self.labels.insert(name, v);
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.labels.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.labels.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

fn check_positive(value: usize, name: &'static str) -> Result<(), FamilyError> {
    if value == 0 {
        Err(FamilyError::NonPositiveParam(name))
    } else {
        Ok(())
    }
}

/// Builds the requested family together with its role labels.
pub fn gen_family(spec: &FamilySpec) -> Result<(Graph, Roles), FamilyError> {
    let mut roles = Roles::default();
    let graph = match *spec {
        FamilySpec::Star { n } => {
            check_positive(n, "n")?;
            roles.set("center".into(), 0);
            let edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
            Graph::new(n + 1, &edges).unwrap()
        }
        FamilySpec::Fan { n } => {
            check_positive(n, "n")?;
            // apex first, then the path vertices
            roles.set("apex".into(), 0);
            let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
            for i in 1..n {
                edges.push((i, i + 1));
            }
            Graph::new(n + 1, &edges).unwrap()
        }
        FamilySpec::Grid { n } => {
            check_positive(n, "n")?;
            grid(n)
        }
        FamilySpec::Wall { n } => {
            check_positive(n, "n")?;
            let g = grid(n);
            let id = |i: usize, j: usize| (i - 1) * n + (j - 1);
            let mut deleted = Vec::new();
            // rows 2i lose the (2j-1, 2j) horizontal edges
            for i in 1.. {
                if 2 * i > n {
                    break;
                }
                for j in 1.. {
                    if 2 * j > n {
                        break;
                    }
                    deleted.push((id(2 * i, 2 * j - 1), id(2 * i, 2 * j)));
                }
            }
            // rows 2i-1 lose the (2j, 2j+1) horizontal edges
            for i in 1.. {
                if 2 * i - 1 > n {
                    break;
                }
                for j in 1.. {
                    if 2 * j + 1 > n {
                        break;
                    }
                    deleted.push((id(2 * i - 1, 2 * j), id(2 * i - 1, 2 * j + 1)));
                }
            }
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| !deleted.contains(&(u, v)) && !deleted.contains(&(v, u)))
                .collect();
            Graph::new(n * n, &edges).unwrap()
        }
        FamilySpec::S { k, n } => {
            check_positive(k, "k")?;
            check_positive(n, "n")?;
            thick_star_paths(k, n, &mut roles)
        }
        FamilySpec::Gnk { n, k } => {
            check_positive(n, "n")?;
            check_positive(k, "k")?;
            for i in 1..=n {
                roles.set(format!("a_{i}"), i - 1);
            }
            let mut pairs = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    pairs.push((i, j));
                }
            }
            let mut edges = Vec::new();
            let mut next = n;
            for &(i, j) in &pairs {
                for l in 1..=k {
                    roles.set(format!("b_{i}_{j}_{l}"), next);
                    edges.push((i - 1, next));
                    edges.push((j - 1, next));
                    next += 1;
                }
            }
            Graph::new(next, &edges).unwrap()
        }
        FamilySpec::ThickPath { n } => {
            check_positive(n, "n")?;
            for i in 1..=n {
                roles.set(format!("p_{i}"), i - 1);
            }
            let mut edges = Vec::new();
            let mut next = n;
            for i in 1..n {
                for _ in 0..n {
                    edges.push((i - 1, next));
                    edges.push((i, next));
                    next += 1;
                }
            }
            Graph::new(next, &edges).unwrap()
        }
        FamilySpec::ThickStar { n } => {
            check_positive(n, "n")?;
            thick_star_paths(n, n, &mut roles)
        }
    };
    Ok((graph, roles))
}

fn grid(n: usize) -> Graph {
    let id = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if j < n {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i < n {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Graph::new(n * n, &edges).unwrap()
}

/// S_{k,n}: hub u_0, arm ends u_1..u_n, and middle vertices v_{i,j}.
fn thick_star_paths(k: usize, n: usize, roles: &mut Roles) -> Graph {
    roles.set("u_0".into(), 0);
    for i in 1..=n {
        roles.set(format!("u_{i}"), i);
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..=k {
            let v = n + (i - 1) * k + j;
            roles.set(format!("v_{i}_{j}"), v);
            edges.push((0, v));
            edges.push((i, v));
        }
    }
    Graph::new(1 + n + k * n, &edges).unwrap()
}

/// Replaces each edge `e` by a path with `times(e)` fresh internal vertices.
/// Original vertex ids are preserved; new ids are assigned in edge order.
pub fn subdivide(g: &Graph, times: &dyn Fn(usize, usize) -> usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = g.vertex_count();
    for &(u, v) in g.edges() {
        let t = times(u, v);
        if t == 0 {
            edges.push((u, v));
            continue;
        }
        let mut prev = u;
        for _ in 0..t {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::new(next, &edges).unwrap()
}

/// Uniform per-edge subdivision.
pub fn subdivide_uniform(g: &Graph, t: usize) -> Graph {
    subdivide(g, &|_, _| t)
}
