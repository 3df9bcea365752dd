// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Generator specifications shared by `gen` and `hunt`.

use clap::{Args, ValueEnum};
use strongedge_core::generators::{
    families, gen_blowup_c5, gen_incidence_pg, gen_random_bounded, gen_random_lift, gen_random_regular, GenError,
};
use strongedge_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Blow-up of the 5-cycle (`--t`).
    Blowup,
    /// Point-line incidence graph of PG(2, q) (`--q`).
    Pg,
    /// Random `d`-regular simple graph (`--d`, `--n`, `--seed`).
    Regular,
    /// Random `k`-lift of the PG(2, q) incidence graph (`--q`, `--lift`, `--seed`).
    Lift,
    /// Random multigraph of bounded degree (`--n`, `--attempts`, `--d`, `--parallel`, `--seed`).
    Bounded,
    /// Cycle on `--n` vertices.
    Cycle,
    /// Path with `--n` edges.
    Path,
    /// Complete graph on `--n` vertices.
    Complete,
    Petersen,
}

#[derive(Debug, Clone, Args)]
pub struct GenSpec {
    pub family: Family,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    #[arg(long, default_value_t = 3)]
    pub q: u32,
    #[arg(long, default_value_t = 4)]
    pub d: usize,
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub lift: usize,
    #[arg(long, default_value_t = 200)]
    pub attempts: usize,
    #[arg(long)]
    pub parallel: bool,
}

impl GenSpec {
    pub fn build(&self, seed: u64) -> Result<Graph, GenError> {
        Ok(match self.family {
            Family::Blowup => gen_blowup_c5(self.t)?,
            Family::Pg => gen_incidence_pg(self.q)?,
            Family::Regular => gen_random_regular(self.d, self.n, seed)?,
            Family::Lift => gen_random_lift(&gen_incidence_pg(self.q)?, self.lift, seed)?,
            Family::Bounded => gen_random_bounded(self.n, self.attempts, self.d, self.parallel, seed),
            Family::Cycle if self.n >= 3 => families::cycle(self.n),
            Family::Cycle => return Err(GenError::InvalidParameters("a cycle needs at least 3 vertices")),
            Family::Path => families::path(self.n),
            Family::Complete => families::complete(self.n),
            Family::Petersen => families::petersen(),
        })
    }
}
