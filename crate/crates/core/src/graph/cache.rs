//! Self-describing JSON records of built graphs, and an on-disk cache keyed
//! by `(kind, n, version)`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{GraphKind, UndirectedGraph, VertexLabel};
use crate::error::{Error, Result};

pub const RECORD_FORMAT: &str = "altpower-graph";

/// Bumped whenever builder output could change.
pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+g1");

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "ALTPOWER_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub format: String,
    pub version: String,
    pub kind: GraphKind,
    pub n: usize,
    pub labels: Vec<String>,
    pub edges: Vec<[u32; 2]>,
}

impl GraphRecord {
    pub fn from_graph<L: VertexLabel>(n: usize, g: &UndirectedGraph<L>) -> Self {
        Self {
            format: RECORD_FORMAT.to_string(),
            version: CODE_VERSION.to_string(),
            kind: L::KIND,
            n,
            labels: g.labels().iter().map(VertexLabel::encode).collect(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_graph<L: VertexLabel>(&self) -> Result<UndirectedGraph<L>> {
        if self.format != RECORD_FORMAT {
            return Err(Error::parse(format!(
                "unknown record format `{}`",
                self.format
            )));
        }
        if self.kind != L::KIND {
            return Err(Error::parse(format!(
                "record holds a {} graph, expected {}",
                self.kind,
                L::KIND
            )));
        }
        let labels = self
            .labels
            .iter()
            .map(|s| L::decode(s, self.n))
            .collect::<Result<Vec<_>>>()?;
        UndirectedGraph::new(
            labels,
            self.edges.iter().map(|&[a, b]| (a as usize, b as usize)),
        )
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir)?;
            }
        }
        fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }
}

#[derive(Debug, Clone)]
pub struct GraphCache {
    dir: PathBuf,
}

impl GraphCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// Cache at `explicit` if given, else at `$ALTPOWER_CACHE_DIR`, else none.
    pub fn resolve(explicit: Option<&Path>) -> Option<Self> {
        explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, kind: GraphKind, n: usize) -> PathBuf {
        self.dir.join(format!("{kind}-n{n}.json"))
    }

    /// Loads a cached graph. Missing, unreadable, or stale entries yield `None`.
    pub fn load<L: VertexLabel>(&self, n: usize) -> Option<UndirectedGraph<L>> {
        let record = GraphRecord::read(&self.path(L::KIND, n)).ok()?;
        if record.version != CODE_VERSION || record.n != n {
            return None;
        }
        record.to_graph().ok()
    }

    pub fn store<L: VertexLabel>(&self, n: usize, g: &UndirectedGraph<L>) -> Result<PathBuf> {
        let path = self.path(L::KIND, n);
        GraphRecord::from_graph(n, g).write(&path)?;
        Ok(path)
    }

    /// Returns the cached graph, or builds and stores it.
    pub fn get_or_build<L: VertexLabel>(
        &self,
        n: usize,
        build: impl FnOnce() -> Result<UndirectedGraph<L>>,
    ) -> Result<UndirectedGraph<L>> {
        if let Some(g) = self.load(n) {
            return Ok(g);
        }
        let g = build()?;
        self.store(n, &g)?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{order_graph, power_type_graph, quotient_power_graph, Limits};
    use crate::partition::PartitionType;
    use crate::perm::CyclicClass;

    #[test]
    fn records_round_trip() {
        let lim = Limits::default();
        let q = quotient_power_graph(6, &lim).unwrap();
        let rec = GraphRecord::from_graph(6, &q);
        let back: UndirectedGraph<CyclicClass> = GraphRecord::from_json(&rec.to_json().unwrap())
            .unwrap()
            .to_graph()
            .unwrap();
        assert_eq!(back, q);

        let t = power_type_graph(9, &lim).unwrap();
        let back: UndirectedGraph<PartitionType> =
            GraphRecord::from_graph(9, &t).to_graph().unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let g = order_graph(7, &Limits::default()).unwrap();
        let rec = GraphRecord::from_graph(7, &g);
        assert!(rec.to_graph::<PartitionType>().is_err());
    }

    #[test]
    fn stale_entries_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = GraphCache::new(dir.path());
        let g = order_graph(8, &Limits::default()).unwrap();
        let path = cache.store(8, &g).unwrap();
        assert_eq!(cache.load::<crate::graph::ElementOrder>(8).unwrap(), g);

        let mut rec = GraphRecord::read(&path).unwrap();
        rec.version = "0.0.0+old".into();
        rec.write(&path).unwrap();
        assert!(cache.load::<crate::graph::ElementOrder>(8).is_none());

        std::fs::write(&path, "{ not json").unwrap();
        assert!(cache.load::<crate::graph::ElementOrder>(8).is_none());
        let rebuilt = cache
            .get_or_build(8, || order_graph(8, &Limits::default()))
            .unwrap();
        assert_eq!(rebuilt, g);
        assert!(cache.load::<crate::graph::ElementOrder>(8).is_some());
    }
}
