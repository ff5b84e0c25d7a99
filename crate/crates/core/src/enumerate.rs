//! Exhaustive generation of all graphs on n vertices up to isomorphism.
//!
//! Level-by-level: every graph on m vertices arises from a graph on m - 1
//! vertices by adding one vertex with some neighbor set, so extending every
//! (m-1)-vertex representative by all 2^(m-1) neighbor subsets and keeping
//! one representative per canonical form yields exactly the m-vertex
//! classes. Levels stay small enough to hold in memory through n = 9
//! (274,668 classes).

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ENUMERATION_MAX_VERTICES: usize = 9;

/// Parents are processed in batches this size so the transient child-form
/// buffers stay bounded.
const PARENT_BATCH: usize = 1024;

/// All graphs on `n` vertices up to isomorphism, as canonical
/// representatives sorted by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidConfiguration("order must be at least 1".into()));
    }
    if n > ENUMERATION_MAX_VERTICES {
        return Err(Error::EnumerationBound { n, max: ENUMERATION_MAX_VERTICES });
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 2..=n {
        let mut forms = std::collections::BTreeSet::new();
        for batch in level.chunks(PARENT_BATCH) {
            let children: Vec<Vec<CanonicalForm>> = batch
                .par_iter()
                .map(|parent| {
                    (0u64..1 << (m - 1))
                        .map(|subset| {
                            let neighbors: Vec<usize> =
                                (0..m - 1).filter(|&v| subset & (1 << v) != 0).collect();
                            canonical_form(&parent.add_vertex_with_edges(&neighbors)?)
                        })
                        .collect()
                })
                .collect::<Result<_>>()?;
            forms.extend(children.into_iter().flatten());
        }
        level = forms.iter().map(CanonicalForm::to_graph).collect();
    }
    Ok(level)
}

/// Number of isomorphism classes on `n` vertices.
pub fn count_graphs(n: usize) -> Result<usize> {
    Ok(enumerate_graphs(n)?.len())
}
