//! Deterministic text exports: vertices in canonical order, edges in
//! lexicographic index order.

use std::io::{self, Write};

use super::PartitionGraph;

pub fn write_dot<W: Write>(graph: &PartitionGraph, mut out: W) -> io::Result<()> {
    writeln!(out, "graph \"pi_d{}_n{}\" {{", graph.dim(), graph.n())?;
    for v in 0..graph.vertex_count() as u32 {
        writeln!(out, "  \"{}\";", graph.label(v))?;
    }
    for (u, v) in graph.graph().edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", graph.label(u), graph.label(v))?;
    }
    writeln!(out, "}}")?;
    out.flush()
}

/// One `u_word,v_word` line per edge.
pub fn write_edge_csv<W: Write>(graph: &PartitionGraph, mut out: W) -> io::Result<()> {
    for (u, v) in graph.graph().edges() {
        writeln!(out, "{},{}", graph.label(u), graph.label(v))?;
    }
    out.flush()
}
