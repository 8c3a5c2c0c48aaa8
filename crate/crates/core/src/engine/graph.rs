use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evidence::Decision;
use crate::group::GroupId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub pair: (u64, u64),
    #[serde(flatten)]
    pub decision: Decision,
}

/// A prime graph with one decision per unordered pair of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeGraph {
    pub group: GroupId,
    pub vertices: Vec<u64>,
    edges: BTreeMap<(u64, u64), Decision>,
}

fn key(r: u64, s: u64) -> (u64, u64) {
    (r.min(s), r.max(s))
}

impl PrimeGraph {
    pub fn new(group: GroupId, mut vertices: Vec<u64>) -> PrimeGraph {
        vertices.sort_unstable();
        vertices.dedup();
        PrimeGraph { group, vertices, edges: BTreeMap::new() }
    }

    pub fn set(&mut self, r: u64, s: u64, d: Decision) {
        self.edges.insert(key(r, s), d);
    }

    pub fn get(&self, r: u64, s: u64) -> Option<&Decision> {
        self.edges.get(&key(r, s))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let v = &self.vertices;
        (0..v.len()).flat_map(move |i| (i + 1..v.len()).map(move |j| (v[i], v[j])))
    }

    pub fn edges(&self) -> impl Iterator<Item = ((u64, u64), &Decision)> {
        self.edges.iter().map(|(&k, d)| (k, d))
    }

    pub fn present_edges(&self) -> Vec<(u64, u64)> {
        self.edges.iter().filter(|(_, d)| matches!(d, Decision::Present(_))).map(|(&k, _)| k).collect()
    }

    pub fn unknown_edges(&self) -> Vec<(u64, u64)> {
        self.pairs().filter(|&(r, s)| !self.get(r, s).is_some_and(|d| d.is_decided())).collect()
    }

    pub fn is_decided(&self) -> bool {
        self.unknown_edges().is_empty()
    }

    /// Connected components as sorted vertex lists; errors while edges are undecided.
    pub fn component_sets(&self) -> Result<Vec<Vec<u64>>> {
        let unknown = self.unknown_edges();
        if !unknown.is_empty() {
            return Err(Error::Undecided(format!("{}: {} undecided pairs, e.g. {:?}", self.group, unknown.len(), unknown[0])));
        }
        let idx: BTreeMap<u64, usize> = self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for (r, s) in self.present_edges() {
            let (a, b) = (find(&mut parent, idx[&r]), find(&mut parent, idx[&s]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            let root = find(&mut parent, i);
            comps.entry(root).or_default().push(v);
        }
        Ok(comps.into_values().collect())
    }

    pub fn components(&self) -> Result<usize> {
        Ok(self.component_sets()?.len())
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"{}\" {{\n", self.group);
        for v in &self.vertices {
            out += &format!("  {v};\n");
        }
        for ((r, s), d) in &self.edges {
            match d {
                Decision::Present(_) => out += &format!("  {r} -- {s};\n"),
                Decision::Unknown(_) => out += &format!("  {r} -- {s} [style=dashed];\n"),
                Decision::Absent(_) => {}
            }
        }
        out + "}\n"
    }

    pub fn to_text(&self) -> String {
        let edges: Vec<String> = self.present_edges().iter().map(|(r, s)| format!("{r}-{s}")).collect();
        let unknown: Vec<String> = self.unknown_edges().iter().map(|(r, s)| format!("{r}-{s}")).collect();
        let comps = self.components().map(|c| c.to_string()).unwrap_or_else(|_| "undecided".into());
        let mut out = format!(
            "group: {}\nvertices: {:?}\nedges: {}\ncomponents: {}\n",
            self.group,
            self.vertices,
            if edges.is_empty() { "(none)".to_string() } else { edges.join(" ") },
            comps
        );
        if !unknown.is_empty() {
            out += &format!("unknown: {}\n", unknown.join(" "));
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    group: GroupId,
    vertices: Vec<u64>,
    edges: Vec<Edge>,
    components: Option<usize>,
}

impl Serialize for PrimeGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            group: self.group.clone(),
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|(&pair, d)| Edge { pair, decision: d.clone() }).collect(),
            components: self.components().ok(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PrimeGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        let mut g = PrimeGraph::new(j.group, j.vertices);
        for e in j.edges {
            g.set(e.pair.0, e.pair.1, e.decision);
        }
        if g.components().ok() != j.components {
            return Err(serde::de::Error::custom("component count does not match the edges"));
        }
        Ok(g)
    }
}
