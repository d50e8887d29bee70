//! Census and converse probe with branches searched in parallel.

use gpd_core::{census_branches, search_branch, Census, Limits, ProbeReport};
use rayon::prelude::*;

use crate::error::Result;

pub fn parallel_census(order: usize, limits: &Limits) -> Result<Census> {
    let branches = census_branches(order, limits)?;
    // collect keeps branch order, so the merge below is deterministic
    let results: Vec<_> = branches.into_par_iter().map(search_branch).collect();
    Ok(Census::from_branches(order, results))
}

pub fn parallel_probe(max_order: usize, limits: &Limits) -> Result<(Vec<Census>, ProbeReport)> {
    let censuses = (1..=max_order)
        .map(|n| parallel_census(n, limits))
        .collect::<Result<Vec<_>>>()?;
    let report = ProbeReport::from_censuses(max_order, &censuses);
    Ok((censuses, report))
}
