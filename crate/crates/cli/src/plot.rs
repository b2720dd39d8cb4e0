// Copyright 2026 The qlbm Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Plain-text SVG line plots of concentration trajectories.

use qlbm_core::solver::ConcentrationField;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 55.0;

// Tab-style palette, cycled over the plotted steps.
const COLORS: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

/// Concentration-vs-x polylines for up to eight evenly spaced steps
/// (always including the first and last).
pub fn render(trajectory: &[ConcentrationField]) -> String {
    let selected = select_steps(trajectory.len());
    let sites = trajectory.first().map_or(0, |f| f.len());
    let max_c = trajectory
        .iter()
        .flat_map(|f| f.values().iter().copied())
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);

    let x_of = |x: usize| {
        MARGIN + (WIDTH - 2.0 * MARGIN) * x as f64 / (sites.saturating_sub(1).max(1)) as f64
    };
    let y_of = |c: f64| HEIGHT - MARGIN - (HEIGHT - 2.0 * MARGIN) * c / max_c;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Axes.
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n",
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    ));
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{t}\" x2=\"{m}\" y2=\"{b}\" stroke=\"black\"/>\n",
        m = MARGIN,
        t = MARGIN,
        b = HEIGHT - MARGIN
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"14\">x</text>\n",
        WIDTH - MARGIN + 10.0,
        HEIGHT - MARGIN + 5.0
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"14\">C</text>\n",
        MARGIN - 25.0,
        MARGIN - 10.0
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>\n",
        MARGIN - 45.0,
        MARGIN + 5.0,
        trim_number(max_c)
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\">0</text>\n",
        MARGIN - 15.0,
        HEIGHT - MARGIN + 5.0
    ));
    if sites > 0 {
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>\n",
            WIDTH - MARGIN - 10.0,
            HEIGHT - MARGIN + 20.0,
            sites - 1
        ));
    }

    for (i, &t) in selected.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let points: Vec<String> = trajectory[t]
            .values()
            .iter()
            .enumerate()
            .map(|(x, &c)| format!("{:.2},{:.2}", x_of(x), y_of(c.max(0.0))))
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            points.join(" ")
        ));
        // Legend entry.
        let ly = MARGIN + 18.0 * i as f64;
        svg.push_str(&format!(
            "<line x1=\"{lx}\" y1=\"{ly}\" x2=\"{}\" y2=\"{ly}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            WIDTH - MARGIN - 60.0,
            lx = WIDTH - MARGIN - 85.0,
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">step {t}</text>\n",
            WIDTH - MARGIN - 55.0,
            ly + 4.0
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

fn select_steps(len: usize) -> Vec<usize> {
    const MAX_CURVES: usize = 8;
    if len <= MAX_CURVES {
        return (0..len).collect();
    }
    let mut steps: Vec<usize> = (0..MAX_CURVES)
        .map(|i| i * (len - 1) / (MAX_CURVES - 1))
        .collect();
    steps.dedup();
    steps
}

fn trim_number(x: f64) -> String {
    let s = format!("{x:.3}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
