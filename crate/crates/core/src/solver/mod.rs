//! Exact solvers for the signed domination number and the four subset
//! parameters around it: domination, k-tuple domination, k-limited packing
//! and packing.
//!
//! Every solver runs in one of two [`Mode`]s. The oracle modes are plain
//! exhaustive enumerations kept deliberately simple; the branch-and-bound
//! modes prune. Both return the lexicographically least optimal certificate,
//! so their outputs can be compared exactly.

mod certificate;
mod search;
mod signed;
mod subset;

use std::fmt;
use std::str::FromStr;

pub use certificate::{
    is_limited_packing, is_packing, is_tuple_dominating, partition_stats, verify_sdf,
    PartitionStats, SetRole, SignedFunction, VertexSet,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    Oracle,
    #[default]
    BranchAndBound,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Mode::Oracle),
            "bnb" | "branch_and_bound" => Ok(Mode::BranchAndBound),
            other => Err(Error::InvalidParameter(format!("unknown solver mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Oracle => "oracle",
            Mode::BranchAndBound => "bnb",
        })
    }
}

/// Largest graph order each solver accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverCaps {
    pub signed_oracle: usize,
    pub signed_bnb: usize,
    pub subset_oracle: usize,
    pub subset_bnb: usize,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps {
            signed_oracle: 20,
            signed_bnb: 40,
            subset_oracle: 24,
            subset_bnb: 40,
        }
    }
}

/// A mode plus size caps; the entry point for all exact computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Solver {
    pub mode: Mode,
    pub caps: SolverCaps,
}

impl Solver {
    pub fn new(mode: Mode) -> Self {
        Solver {
            mode,
            caps: SolverCaps::default(),
        }
    }

    pub fn with_caps(mut self, caps: SolverCaps) -> Self {
        self.caps = caps;
        self
    }

    fn check_cap(&self, g: &Graph, signed: bool) -> Result<()> {
        let (solver, cap) = match (signed, self.mode) {
            (true, Mode::Oracle) => ("signed domination oracle", self.caps.signed_oracle.min(63)),
            (true, Mode::BranchAndBound) => ("signed domination branch-and-bound", self.caps.signed_bnb),
            (false, Mode::Oracle) => ("subset oracle", self.caps.subset_oracle),
            (false, Mode::BranchAndBound) => ("subset branch-and-bound", self.caps.subset_bnb),
        };
        if g.n() > cap {
            return Err(Error::CapExceeded { solver, n: g.n(), cap });
        }
        Ok(())
    }

    /// The signed domination number with its lexicographically least optimal
    /// witness (`-1` ordered before `+1`).
    pub fn signed_domination(&self, g: &Graph) -> Result<(i64, SignedFunction)> {
        self.check_cap(g, true)?;
        let f = match self.mode {
            Mode::Oracle => signed::oracle(g),
            Mode::BranchAndBound => signed::branch_and_bound(g),
        };
        Ok((f.weight(), f))
    }

    pub fn domination_number(&self, g: &Graph) -> Result<(usize, VertexSet)> {
        let (size, set) = self.tuple_domination_number(g, 1)?;
        Ok((size, set.with_role(SetRole::Dominating)))
    }

    /// Requires `1 <= k <= δ + 1`.
    pub fn tuple_domination_number(&self, g: &Graph, k: usize) -> Result<(usize, VertexSet)> {
        if k == 0 || k > g.min_degree() + 1 {
            return Err(Error::InvalidParameter(format!(
                "k-tuple domination needs 1 <= k <= δ + 1 = {}, got k = {k}",
                g.min_degree() + 1
            )));
        }
        self.check_cap(g, false)?;
        let members = match self.mode {
            Mode::Oracle => subset::cover_oracle(g, k),
            Mode::BranchAndBound => subset::cover_search(g, k),
        };
        Ok((members.len(), VertexSet::new(SetRole::TupleDominating(k), members)))
    }

    /// Requires `k >= 1`.
    pub fn limited_packing_number(&self, g: &Graph, k: usize) -> Result<(usize, VertexSet)> {
        if k == 0 {
            return Err(Error::InvalidParameter("limited packing needs k >= 1".into()));
        }
        self.check_cap(g, false)?;
        let members = match self.mode {
            Mode::Oracle => subset::packing_oracle(g, k),
            Mode::BranchAndBound => subset::packing_search(g, k),
        };
        Ok((members.len(), VertexSet::new(SetRole::LimitedPacking(k), members)))
    }

    pub fn packing_number(&self, g: &Graph) -> Result<(usize, VertexSet)> {
        let (size, set) = self.limited_packing_number(g, 1)?;
        Ok((size, set.with_role(SetRole::Packing)))
    }
}

pub fn signed_domination(g: &Graph, mode: Mode) -> Result<(i64, SignedFunction)> {
    Solver::new(mode).signed_domination(g)
}

pub fn domination_number(g: &Graph, mode: Mode) -> Result<(usize, VertexSet)> {
    Solver::new(mode).domination_number(g)
}

pub fn tuple_domination_number(g: &Graph, k: usize, mode: Mode) -> Result<(usize, VertexSet)> {
    Solver::new(mode).tuple_domination_number(g, k)
}

pub fn limited_packing_number(g: &Graph, k: usize, mode: Mode) -> Result<(usize, VertexSet)> {
    Solver::new(mode).limited_packing_number(g, k)
}

pub fn packing_number(g: &Graph, mode: Mode) -> Result<(usize, VertexSet)> {
    Solver::new(mode).packing_number(g)
}
