//! The on-disk drawing document: a versioned JSON form of a drawing with
//! exact symbolic coordinates, round-tripping losslessly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawer::Drawing;
use crate::geometry::{Point, SlopeSet};
use crate::graph::Graph;
use crate::pipeline::PipelineTrace;

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Error, Debug)]
pub enum DocumentError {
    #[error("unsupported document version {0}")]
    Version(u32),
    #[error("document graph is invalid: {0}")]
    Graph(#[from] crate::error::GraphError),
    #[error("coordinate count {got} does not match vertex count {expected}")]
    CoordinateArity { expected: usize, got: usize },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// The graph part of a document.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> GraphDocument {
        GraphDocument {
            n: g.n(),
            edges: g.edges(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, DocumentError> {
        Ok(Graph::simple(self.n, &self.edges)?)
    }
}

/// A drawing with its graph, slope set, and optional pipeline trace.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DrawingDocument {
    pub version: u32,
    pub graph: GraphDocument,
    pub coordinates: Vec<Point>,
    pub slopes: SlopeSet,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<PipelineTrace>,
}

impl DrawingDocument {
    pub fn from_drawing(d: &Drawing, trace: Option<PipelineTrace>) -> DrawingDocument {
        DrawingDocument {
            version: DOCUMENT_VERSION,
            graph: GraphDocument::from_graph(&d.graph),
            coordinates: d.pos.clone(),
            slopes: d.slope_set.clone(),
            trace,
        }
    }

    /// Reconstructs the drawing, validating version, graph, and arity.
    pub fn to_drawing(&self) -> Result<Drawing, DocumentError> {
        if self.version != DOCUMENT_VERSION {
            return Err(DocumentError::Version(self.version));
        }
        let graph = self.graph.to_graph()?;
        if self.coordinates.len() != graph.n() {
            return Err(DocumentError::CoordinateArity {
                expected: graph.n(),
                got: self.coordinates.len(),
            });
        }
        Ok(Drawing::new(
            graph,
            self.coordinates.clone(),
            self.slopes.clone(),
        ))
    }

    pub fn to_json(&self) -> Result<String, DocumentError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<DrawingDocument, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawer::{fixture_drawing, FixtureName};
    use crate::pipeline::{draw_cubic, PipelineConfig};

    #[test]
    fn fixture_roundtrip() {
        let d = fixture_drawing(FixtureName::Tietze);
        let doc = DrawingDocument::from_drawing(&d, None);
        let json = doc.to_json().unwrap();
        let back = DrawingDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        let rebuilt = back.to_drawing().unwrap();
        assert_eq!(rebuilt.pos, d.pos);
        assert_eq!(rebuilt.graph, d.graph);
    }

    #[test]
    fn symbolic_roundtrip_with_trace() {
        let g = crate::samples::two_gadget();
        let out = draw_cubic(&g, &PipelineConfig::default()).unwrap();
        let doc = DrawingDocument::from_drawing(&out.drawing, Some(out.trace.clone()));
        let json = doc.to_json().unwrap();
        let back = DrawingDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.trace, Some(out.trace));
    }

    #[test]
    fn version_checked() {
        let d = fixture_drawing(FixtureName::K33);
        let mut doc = DrawingDocument::from_drawing(&d, None);
        doc.version = 99;
        assert!(matches!(
            doc.to_drawing(),
            Err(DocumentError::Version(99))
        ));
    }

    #[test]
    fn arity_checked() {
        let d = fixture_drawing(FixtureName::K33);
        let mut doc = DrawingDocument::from_drawing(&d, None);
        doc.coordinates.pop();
        assert!(matches!(
            doc.to_drawing(),
            Err(DocumentError::CoordinateArity { expected: 6, got: 5 })
        ));
    }
}
