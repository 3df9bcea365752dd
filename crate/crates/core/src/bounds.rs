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

/// Greedy upper bound and the conjectured optimum for maximum degree `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// `2Δ² - 2Δ + 1`.
    pub greedy: u64,
    /// `5Δ²/4` for even `Δ`, `(5Δ² - 2Δ + 1)/4` for odd `Δ`.
    pub conjectured: u64,
}

pub fn bounds(delta: u64) -> Bounds {
    let d2 = delta * delta;
    let greedy = 2 * d2 + 1 - 2 * delta;
    let conjectured = if delta.is_multiple_of(2) { 5 * d2 / 4 } else { (5 * d2 + 1 - 2 * delta) / 4 };
    Bounds { greedy, conjectured }
}
