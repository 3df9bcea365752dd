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

//! File formats and subcommands behind the `strongedge` binary.

pub mod commands;
pub mod formats;
pub mod generate;

use clap::{Parser, Subcommand};

use commands::{ColorArgs, ExactArgs, GenArgs, HuntArgs, OutputFormat, VerifyArgs};

/// Strong edge-coloring toolkit for graphs of maximum degree four.
#[derive(Debug, Parser)]
#[command(name = "strongedge", version)]
pub struct Cli {
    /// Format of reports written to standard output.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a graph and write the coloring as JSON.
    Color(ColorArgs),
    /// Compute the strong chromatic index, or bounds when the budget runs out.
    Exact(ExactArgs),
    /// Run solvers over a seeded range of generated graphs.
    Hunt(HuntArgs),
    /// Check a coloring file against a graph file.
    Verify(VerifyArgs),
    /// Generate a graph.
    Gen(GenArgs),
}

impl Cli {
    pub fn run(&self) -> Result<String, commands::Failure> {
        match &self.command {
            Command::Color(a) => commands::color(a),
            Command::Exact(a) => commands::exact(a, self.format),
            Command::Hunt(a) => commands::hunt(a, self.format),
            Command::Verify(a) => commands::verify(a),
            Command::Gen(a) => commands::gen(a),
        }
    }
}
