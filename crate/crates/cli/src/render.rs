//! Strip renderings. Display-only: the ASCII view quantizes each cell's
//! fill to ten vertical bands, the SVG view draws one rectangle per bar at
//! exact integer part coordinates. Both are pure functions of the packing.

use twobar_core::{CellPacking, Instance};

const BANDS: u64 = 10;

fn cell_totals(p: &CellPacking, s: &Instance) -> Vec<u64> {
    let width = p.positions().iter().map(|&q| q + 1).max().unwrap_or(0) as usize;
    let mut totals = vec![0u64; width + 1]; // 1-based cells
    for (i, &q) in p.positions().iter().enumerate() {
        totals[q as usize] += u64::from(s.chart(i).a());
        totals[q as usize + 1] += u64::from(s.chart(i).b());
    }
    totals
}

/// Ten text rows, top band first: `#` where the cell's total height reaches
/// the band, `.` elsewhere, then a rule and a cell-number ruler (last digit
/// of each 1-based cell index).
pub fn render_ascii(p: &CellPacking, s: &Instance) -> String {
    let totals = cell_totals(p, s);
    let width = totals.len() - 1;
    let d = u64::from(s.denominator());
    let mut out = String::new();
    for band in (1..=BANDS).rev() {
        for &t in &totals[1..] {
            // Ceiling quantization: any occupied cell shows at least one band.
            let filled = (t * BANDS).div_ceil(d);
            out.push(if filled >= band { '#' } else { '.' });
        }
        out.push('\n');
    }
    out.push_str(&"-".repeat(width));
    out.push('\n');
    for cell in 1..=width {
        out.push_str(&(cell % 10).to_string());
    }
    out.push('\n');
    out
}

const PALETTE: [&str; 6] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2",
];

/// Cell width in part units, chosen so a strip of square-ish cells comes out
/// at the full denominator height.
const CELL_W: u32 = 250;

/// One rectangle per bar, stacked in chart order, on an integer coordinate
/// grid of part units (no floating point anywhere).
pub fn render_svg(p: &CellPacking, s: &Instance) -> String {
    let totals_len = cell_totals(p, s).len();
    let width = (totals_len - 1) as u32;
    let d = s.denominator();
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\">\n",
        width * CELL_W,
        d
    );
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#f5f5f4\" stroke=\"#444\"/>\n",
        width * CELL_W,
        d
    ));
    let mut filled = vec![0u32; totals_len]; // height already used per cell
    for (i, &q) in p.positions().iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        for (cell, h) in [(q, s.chart(i).a()), (q + 1, s.chart(i).b())] {
            let base = filled[cell as usize];
            out.push_str(&format!(
                "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"#333\"/>\n",
                (cell - 1) * CELL_W,
                d - base - h,
                CELL_W,
                h,
                color,
            ));
            filled[cell as usize] = base + h;
        }
    }
    out.push_str("</svg>\n");
    out
}
