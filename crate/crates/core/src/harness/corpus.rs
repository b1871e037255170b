//! Graph sources for the suite.
//!
//! ```text
//! geng:n<=7     all connected graphs on 1..=7 vertices (also geng:n=7)
//! trees:n<=9    trees            girth7:n<=10   connected, girth >= 7
//! block:n<=12   block graphs     file:<path>    one graph6 string per line
//! path:5;named:figgirth;...      explicit family specs
//! ```

use std::fs;

use crate::error::{KdmvError, Result};
use crate::graph::{
    block_graphs, connected_graphs, generate, girth_at_least_graphs, parse_graph6, to_graph6, trees, FamilySpec, Graph,
};

/// Largest order accepted by the exhaustive generators.
pub const MAX_GENERATED_ORDER: usize = 10;
/// Block graphs are far fewer, so they go further.
pub const MAX_BLOCK_ORDER: usize = 12;

#[derive(Clone, Debug)]
pub struct CorpusItem {
    /// Spec string, or the graph6 string for generated and file graphs.
    pub id: String,
    pub graph: Graph,
    pub spec: FamilySpec,
}

impl CorpusItem {
    pub fn from_spec(spec: FamilySpec) -> Result<Self> {
        let graph = generate(&spec)?;
        Ok(CorpusItem {
            id: spec.to_string(),
            graph,
            spec,
        })
    }

    pub fn from_graph(graph: Graph) -> Self {
        let g6 = to_graph6(&graph);
        CorpusItem {
            id: g6.clone(),
            spec: FamilySpec::Graph6(g6),
            graph,
        }
    }
}

/// Loads a corpus description (see the module docs).
pub fn load_corpus(source: &str) -> Result<Vec<CorpusItem>> {
    let source = source.trim();
    if let Some(path) = source.strip_prefix("file:") {
        return load_file(path);
    }
    if let Some((kind, range)) = source.split_once(':') {
        let generator: Option<fn(usize) -> Vec<Graph>> = match kind.to_ascii_lowercase().as_str() {
            "geng" => Some(connected_graphs),
            "trees" => Some(trees),
            "girth7" => Some(|n| girth_at_least_graphs(7, n)),
            "block" => Some(block_graphs),
            _ => None,
        };
        if let Some(generator) = generator {
            let max = if kind.eq_ignore_ascii_case("block") {
                MAX_BLOCK_ORDER
            } else {
                MAX_GENERATED_ORDER
            };
            let (lo, hi) = parse_range(range, max)?;
            return Ok((lo..=hi).flat_map(generator).map(CorpusItem::from_graph).collect());
        }
    }
    source
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<FamilySpec>().and_then(CorpusItem::from_spec))
        .collect()
}

/// `n<=N` gives `1..=N`, `n=N` or `N` gives `N..=N`.
fn parse_range(text: &str, max: usize) -> Result<(usize, usize)> {
    let text = text.trim();
    let bad = || KdmvError::Spec(format!("bad order range {text:?} (use n<=N or n=N)"));
    let (lo_inclusive, number) = if let Some(rest) = text.strip_prefix("n<=") {
        (false, rest)
    } else if let Some(rest) = text.strip_prefix("n=") {
        (true, rest)
    } else {
        (true, text)
    };
    let n: usize = number.trim().parse().map_err(|_| bad())?;
    if n == 0 || n > max {
        return Err(KdmvError::Spec(format!("order must be in 1..={max}, got {n}")));
    }
    Ok(if lo_inclusive { (n, n) } else { (1, n) })
}

fn load_file(path: &str) -> Result<Vec<CorpusItem>> {
    let text = fs::read_to_string(path).map_err(|e| KdmvError::Io(format!("{path}: {e}")))?;
    text.lines()
        .map(|l| l.trim().trim_start_matches(">>graph6<<"))
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_graph6(l).map(CorpusItem::from_graph))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_sources() {
        assert_eq!(load_corpus("geng:n<=4").unwrap().len(), 1 + 1 + 2 + 6);
        assert_eq!(load_corpus("geng:n=5").unwrap().len(), 21);
        assert_eq!(load_corpus("trees:n<=6").unwrap().len(), 1 + 1 + 1 + 2 + 3 + 6);
        assert!(load_corpus("geng:n<=0").is_err());
        assert!(load_corpus("geng:n<=11").is_err());
        assert_eq!(
            load_corpus("block:n=11").map(|c| c.len()).map_err(|e| e.to_string()),
            Ok(4960)
        );
        assert!(load_corpus("block:n<=13").is_err());
    }

    #[test]
    fn spec_lists() {
        let c = load_corpus("path:3; cycle:4 ;named:figgirth").unwrap();
        let ids: Vec<&str> = c.iter().map(|i| i.id.as_str()).collect();
        assert_eq!(ids, ["path:3", "cycle:4", "named:FigGirth"]);
        assert!(load_corpus("path:3;bogus:1").is_err());
    }

    #[test]
    fn graph6_files() {
        let dir = std::env::temp_dir().join(format!("kdmv-corpus-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.g6");
        fs::write(&path, ">>graph6<<Bw\n# comment\n\nCr\n").unwrap();
        let c = load_corpus(&format!("file:{}", path.display())).unwrap();
        assert_eq!(c.iter().map(|i| i.graph.n()).collect::<Vec<_>>(), [3, 4]);
        assert!(matches!(load_corpus("file:/nonexistent/x.g6"), Err(KdmvError::Io(_))));
        fs::remove_dir_all(dir).unwrap();
    }
}
