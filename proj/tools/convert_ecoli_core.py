#!/usr/bin/env python3
"""One-time conversion of the E. coli core metabolic model into reaction text.

Requires cobrapy (`pip install cobra`), which bundles the BiGG ``e_coli_core``
network as its ``textbook`` model (72 metabolites, 95 reactions).

Metabolite identifiers are the display name, reduced to ``[A-Za-z0-9-]`` with
hyphens for separators, followed by ``_<compartment>``. Cytosolic and
extracellular protons therefore become ``H_c`` and ``H_e``.

Stoichiometric coefficients are dropped; a species is either a substrate or a
product of a reaction. Reversible reactions are written with ``<->``.

Usage: convert_ecoli_core.py > data/ecoli_core.reactions
"""

import re
import sys

from cobra.io import load_model


def species_id(met):
    name = re.sub(r"[^A-Za-z0-9]+", "-", met.name).strip("-")
    return f"{name}_{met.compartment}"


def main():
    model = load_model("textbook")
    ids = {}
    for met in model.metabolites:
        sid = species_id(met)
        if sid in ids.values():
            sys.exit(f"identifier collision: {sid}")
        ids[met.id] = sid

    out = sys.stdout
    out.write("# E. coli core metabolic network (BiGG e_coli_core via cobrapy 'textbook')\n")
    out.write(f"# {len(model.metabolites)} metabolites, {len(model.reactions)} reactions\n")
    for rxn in model.reactions:
        subs = [ids[m.id] for m, c in rxn.metabolites.items() if c < 0]
        prods = [ids[m.id] for m, c in rxn.metabolites.items() if c > 0]
        arrow = "<->" if rxn.reversibility else "->"
        line = f"{rxn.id}: {' + '.join(subs)} {arrow} {' + '.join(prods)}"
        out.write(line.rstrip() + "\n")


if __name__ == "__main__":
    main()
