"""Figure rendering for the report paths: colored-graph drawings for
check/search results and cut-value curves for dynamics traces.

matplotlib (Agg) writes straight to files; networkx is used only to lay the
nodes out.  Game logic never depends on this module.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx
from matplotlib.lines import Line2D

from .deviation import JointMove, apply_move
from .dynamics import DynamicsTrace
from .game import ColorAssignment, GameSpec

_PALETTE = plt.get_cmap("tab10")


def _layout(spec: GameSpec):
    g = nx.Graph()
    g.add_nodes_from(range(spec.n))
    g.add_edges_from(spec.graph.edge_pairs())
    return g, nx.spring_layout(g, seed=7)


def _draw_profile(ax, g, pos, spec: GameSpec, sigma: ColorAssignment,
                  highlight: tuple[int, ...] = (), title: str = "") -> None:
    mono = [(u, v) for u, v in g.edges() if sigma[u] == sigma[v]]
    proper = [(u, v) for u, v in g.edges() if sigma[u] != sigma[v]]
    nx.draw_networkx_edges(g, pos, edgelist=proper, ax=ax, edge_color="0.6")
    nx.draw_networkx_edges(g, pos, edgelist=mono, ax=ax, edge_color="crimson",
                           style="dashed", width=1.8)
    node_colors = [_PALETTE((sigma[v] - 1) % 10) for v in range(spec.n)]
    borders = ["black" if v in highlight else "0.4" for v in range(spec.n)]
    widths = [2.5 if v in highlight else 0.8 for v in range(spec.n)]
    nx.draw_networkx_nodes(g, pos, ax=ax, node_color=node_colors,
                           edgecolors=borders, linewidths=widths, node_size=420)
    nx.draw_networkx_labels(g, pos, ax=ax, font_size=9)
    weights = {
        (u, v): f"{w.numerator}/{w.denominator}" if w.denominator != 1 else str(w.numerator)
        for u, v, w in spec.graph.edges()
        if w != 1
    }
    if weights:
        nx.draw_networkx_edge_labels(g, pos, edge_labels=weights, ax=ax, font_size=7)
    ax.set_title(title)
    ax.set_axis_off()


def save_coloring_figure(
    spec: GameSpec,
    sigma: ColorAssignment,
    path: str,
    highlight: tuple[int, ...] = (),
    title: str = "",
) -> None:
    g, pos = _layout(spec)
    fig, ax = plt.subplots(figsize=(5, 4.2))
    _draw_profile(ax, g, pos, spec, sigma, highlight, title)
    ax.add_artist(_legend(ax))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _legend(ax):
    handles = [
        Line2D([], [], color="0.6", label="cut edge"),
        Line2D([], [], color="crimson", linestyle="--", label="monochromatic"),
    ]
    return ax.legend(handles=handles, loc="lower left", fontsize=7, frameon=False)


def save_deviation_figure(
    spec: GameSpec,
    sigma: ColorAssignment,
    move: JointMove,
    path: str,
    title: str = "",
) -> None:
    """Side-by-side profiles before and after a coalition deviation, the
    coalition ringed in black."""
    g, pos = _layout(spec)
    after = apply_move(sigma, move)
    fig, axes = plt.subplots(1, 2, figsize=(9.5, 4.2))
    _draw_profile(axes[0], g, pos, spec, sigma, move.coalition, "before")
    _draw_profile(axes[1], g, pos, spec, after, move.coalition, "after deviation")
    if title:
        fig.suptitle(title)
    axes[0].add_artist(_legend(axes[0]))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_trace_figure(trace: DynamicsTrace, path: str, title: str = "") -> None:
    """Cut value against step index, decreases marked in red."""
    values = [float(c) for c in trace.cut_values]
    steps = list(range(len(values)))
    fig, ax = plt.subplots(figsize=(6, 3.6))
    ax.plot(steps, values, marker="o", color="steelblue", linewidth=1.5)
    for i in trace.potential_decreases:
        ax.plot([i, i + 1], [values[i], values[i + 1]], color="crimson",
                linewidth=2.5, zorder=3)
    if trace.status == "cycle" and trace.first_repeat_index is not None:
        ax.axvline(trace.first_repeat_index, color="0.6", linestyle=":",
                   label=f"revisited state {trace.first_repeat_index}")
        ax.legend(fontsize=8, frameon=False)
    ax.set_xlabel("step")
    ax.set_ylabel("cut value")
    ax.set_title(title or f"dynamics: {trace.status}")
    ax.grid(alpha=0.25)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
