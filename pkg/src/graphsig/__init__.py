"""graphsig: exact adjacency-spectrum signature laboratory for small graphs.

Computes the signature s = p - n of adjacency spectra in exact integer
arithmetic, counts simple cycles by length mod 4, constructs derived graphs
(line graphs, powers, subdivisions, total graphs, suns), and machine-checks
a catalogue of structural/spectral laws over exhaustively enumerated graph
families, including counterexample search for the open bound
-c3(G) <= s(G) <= c5(G).
"""

from .graphs import (Graph, Graph6ParseError, StructureSummary, complete_graph,
                     components, cut_vertices, cycle_graph, cycle_type,
                     delete_edge, delete_vertices, disjoint_union, from_graph6,
                     induced, is_bipartite, is_connected, is_tree, path_graph,
                     star_graph, structure, to_graph6)
from .inertia import (Inertia, char_poly, congruence_inertia,
                      float_inertia_oracle, inertia, inertia_from_char_poly,
                      nullity, rank, signature)
from .cycles import (CycleCensus, census, count_cycles_of_length,
                     count_residue_cycles, cycle_counts_exact,
                     cycles_through_vertex, exact_census)
from .transforms import (ContractionSite, SunSpec, contract_path4,
                         find_contraction_sites, line_graph, power,
                         reduce_fully, subdivision, sun, total_graph)
from .families import (StreamItem, bicyclic_from_unicyclic, free_tree_count,
                       free_trees, ingest_graph6, sun_grid, tree_canonical_form,
                       unicyclic_from_trees)
from .harness import (ALL_CHECK_IDS, CheckReport, RunSummary, apply_check,
                      check_conjecture, check_cut_vertex_laws,
                      check_lemma_2_1, check_lemma_3_1,
                      check_line_graph_theorems, check_power_tree_theorems,
                      check_sun_nullity, check_total_graph,
                      predict_sun_nullity, run_checks, search_counterexamples,
                      zero_chain_profile)

__version__ = "0.1.0"
