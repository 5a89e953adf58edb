//! Gain graphs on a cycle are classified by the gain of one closed walk
//! around it.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GainGraph, Walk};
use crate::group::{Element, FiniteGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleReport {
    pub n: usize,
    /// `W₀`: start at vertex 0, step to its smaller neighbor, go around.
    pub walk: Vec<usize>,
    pub gain: Element,
    pub class: usize,
    pub inverse_class: usize,
    pub order: usize,
}

/// What the classification predicts for a pair of cycle gain graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CycleComparison {
    pub switching_equivalent: bool,
    pub switching_isomorphic: bool,
    pub g_cospectral: bool,
    pub lambda_cospectral: bool,
}

pub fn cycle_classify(g: &GainGraph) -> Result<CycleReport> {
    let h = g.underlying();
    if !h.is_cycle() {
        return Err(Error::NotACycle);
    }
    let n = h.vertex_count();
    let mut walk = vec![0, h.neighbors(0)[0]];
    while walk.len() < n + 1 {
        let (prev, cur) = (walk[walk.len() - 2], walk[walk.len() - 1]);
        let next = *h
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .expect("degree two");
        walk.push(next);
    }
    let grp = g.group();
    let gain = g.gain_of_walk(&Walk(walk.clone()))?;
    Ok(CycleReport {
        n,
        walk,
        gain,
        class: grp.class_of(gain),
        inverse_class: grp.class_of(grp.inv(gain)),
        order: grp.element_order(gain),
    })
}

impl CycleReport {
    pub fn is_balanced(&self) -> bool {
        self.order == 1
    }

    /// Predictions for two cycles of the same length.
    pub fn compare(&self, other: &CycleReport) -> CycleComparison {
        let same_length = self.n == other.n;
        let equivalent = same_length && self.class == other.class;
        let isomorphic =
            same_length && (self.class == other.class || self.class == other.inverse_class);
        CycleComparison {
            switching_equivalent: equivalent,
            switching_isomorphic: isomorphic,
            g_cospectral: isomorphic,
            lambda_cospectral: same_length && self.order == other.order,
        }
    }
}

/// Number of classes of `G`-gain graphs on a fixed cycle under each relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CycleClassCounts {
    pub switching_classes: usize,
    pub isomorphism_classes: usize,
    pub cospectrality_classes: usize,
    pub lambda_spectra: usize,
}

pub fn cycle_class_counts(group: &FiniteGroup) -> CycleClassCounts {
    let up_to_inverse: BTreeSet<(usize, usize)> = (0..group.num_classes())
        .map(|c| {
            let d = group.class_of(group.inv(group.classes()[c][0]));
            (c.min(d), c.max(d))
        })
        .collect();
    let orders: BTreeSet<usize> = group.elements().map(|g| group.element_order(g)).collect();
    CycleClassCounts {
        switching_classes: group.num_classes(),
        isomorphism_classes: up_to_inverse.len(),
        cospectrality_classes: up_to_inverse.len(),
        lambda_spectra: orders.len(),
    }
}
