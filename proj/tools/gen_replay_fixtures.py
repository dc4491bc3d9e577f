#!/usr/bin/env python3
# Copyright 2026 The manucheck Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the authored replay stores under tests/fixtures/replay/.

Each store is a directory with manifest.json and run_NNN.txt files. The
outcome of every run (which targets it flags, or whether it is unparseable)
is fixed by the tables below; only the surrounding prose varies, chosen with
a seeded RNG so the output is stable.

Usage: gen_replay_fixtures.py [OUTPUT_DIR]
"""

import json
import pathlib
import random
import sys

SCOPE = "detection of the reactions of O-containing functional groups"
CONCEPT = "power of ¹⁷O NMR"
H2O17 = "H₂¹⁷O"

# ---------------------------------------------------------------------------
# Integrity outputs

UNITS_PREAMBLE = [
    "## Information Units\n\n"
    "1. \"A two-stage distillation procedure ... was developed\" (Category 2, Methods): substantiated.\n"
    "2. \"characterized by ¹⁷O NMR and mass spectrometry\" (Category 2, Methods): substantiated.\n"
    "3. \"500 mL\" (Category 4, Methods): substantiated.\n",
    "## Information Units\n\n"
    "Sentence 3 was split into three units: the input volume, the input qualifier and the output.\n"
    "The input volume is stated in the Methods; the remaining units were checked against Results and Discussion.\n",
    "## Information Units\n\n"
    "| IU | Category | Status |\n|---|---|---|\n"
    "| 500 mL | 4 | Substantiated |\n| enriched water | 4 | see below |\n",
]

FLAG_90 = [
    "- \"90 mL of {h}\" -- Unsubstantiated (the output volume is not stated in the main text)",
    "- \"about 90 mL of {h}\" \u2014 Unsubstantiated (no yield is reported in Results)",
    "- “90 mL of {h}” \u2014 Unsubstantiated (cannot be derived from the tables or figures)",
    "* \"90 mL of {h} was obtained\" - Unsubstantiated (new quantitative result)",
]
FLAG_40 = [
    "- \"40-fold enriched water\" -- Unsubstantiated (the enrichment factor is never given in the main text)",
    "- \"40-fold enriched water\" \u2014 Partially Substantiated (enriched water is described, the factor is not)",
    "- “40-fold enriched” \u2014 Unsubstantiated (implied result of the first stage, not stated)",
]
FLAG_500_OK_NOTE = [
    "",
    "\nNote: \"500 mL\" is stated in the Methods and is not flagged.\n",
]
REASONABLE = (
    "\nNote: \"40-fold enriched water\" was judged a reasonable summary of the first "
    "distillation stage and is not flagged.\n"
)
PROSE_ONLY = (
    "The Conclusions summarize the distillation procedure and the labeled compounds. "
    "Most statements are supported by the Methods and Results, although the final "
    "yield could be stated more precisely. Overall the section is consistent with the manuscript.\n"
)


def integrity_text(rng, flags):
    """flags: subset of {'90', '40'}; None means unparseable prose."""
    if flags is None:
        return PROSE_ONLY
    out = rng.choice(UNITS_PREAMBLE)
    heading = rng.choice(["## Flagged Items", "## Flagged Items:", "**Flagged Items**"])
    out += "\n" + heading + "\n\n"
    lines = []
    if "40" in flags:
        lines.append(rng.choice(FLAG_40))
    if "90" in flags:
        lines.append(rng.choice(FLAG_90).format(h=H2O17))
    if rng.random() < 0.5:
        lines.reverse()
    out += "\n".join(lines) + "\n" if lines else "None\n"
    if "40" not in flags and "90" in flags and rng.random() < 0.3:
        out += REASONABLE
    out += rng.choice(FLAG_500_OK_NOTE)
    return out


# ---------------------------------------------------------------------------
# Linguistic outputs

FINDINGS = [
    "## Findings\n\nSentence 5 opens with a standalone \"This\". Its clause: action \"illustrates\", "
    "concept \"{c}\", scope modifier \"{s}\". Candidates: sentences 4 and 3.\n",
    "## Findings\n\n1. Pronoun \"This\" (sentence 5), standalone.\n"
    "2. Preceding sentence reports preparation and characterization of labeled compounds.\n",
    "## Findings\n\nOne standalone demonstrative was found. No expletive pronouns.\n",
]

SCOPE_VARIANTS = [SCOPE, "detection of the reactions", "the detection of reactions of O-containing groups"]


def component(rng, role, text, status):
    sep = rng.choice([" -- ", " \u2014 "])
    return f"  - {role}: \"{text}\"{sep}{status}"


def linguistic_text(rng, outcome):
    """outcome: 'hit', 'none', 'concept_only', 'scope_supported', 'prose'."""
    if outcome == "prose":
        return ("The pronoun \"This\" in the fifth sentence refers back to the preparation "
                "of labeled compounds and is acceptable in context. No changes are needed.\n")
    out = rng.choice(FINDINGS).format(c=CONCEPT, s=SCOPE)
    out += "\n" + rng.choice(["## Flagged Items", "### Flagged Items", "**Flagged Items**"]) + "\n\n"
    if outcome == "none":
        return out + "None\n"
    sep = rng.choice([" -- ", " \u2014 "])
    out += f"- \"This\" (sentence 5){sep}Ambiguous\n"
    comps = []
    if rng.random() < 0.5:
        comps.append(component(rng, "action", "illustrates", "Unsupported"))
    if outcome == "hit":
        if rng.random() < 0.7:
            comps.append(component(rng, "concept", CONCEPT, "Unsupported"))
        comps.append(component(rng, "scope_modifier", rng.choice(SCOPE_VARIANTS), "Unsupported"))
    elif outcome == "concept_only":
        comps.append(component(rng, "concept", CONCEPT, "Unsupported"))
    elif outcome == "scope_supported":
        comps.append(component(rng, "concept", CONCEPT, "Unsupported"))
        comps.append(component(rng, "scope_modifier", SCOPE, "Supported"))
    return out + "\n".join(comps) + "\n"


# ---------------------------------------------------------------------------

def place(rng, n, special):
    """Returns a list of n outcomes: `special` maps outcome -> count, the rest 'hit'."""
    outcomes = []
    for outcome, count in special.items():
        outcomes += [outcome] * count
    outcomes += ["hit"] * (n - len(outcomes))
    rng.shuffle(outcomes)
    return outcomes


def write_store(root, name, manifest, texts):
    d = root / name
    d.mkdir(parents=True, exist_ok=True)
    for old in d.glob("run_*.txt"):
        old.unlink()
    manifest = dict(manifest, run_count=len(texts), provenance="authored")
    (d / "manifest.json").write_text(json.dumps(manifest, indent=2, ensure_ascii=False) + "\n",
                                     encoding="utf-8")
    for i, t in enumerate(texts):
        (d / f"run_{i:03d}.txt").write_text(t, encoding="utf-8")


def integrity_store(root, name, model, seed, runs):
    rng = random.Random(seed)
    texts = [integrity_text(rng, r) for r in runs]
    write_store(root, name, {"prompt_id": "integrity", "model_name": model,
                             "description": f"{model} integrity runs on the ground-truth fixture"},
                texts)


def linguistic_store(root, name, model, context, seed, outcomes):
    rng = random.Random(seed)
    texts = [linguistic_text(rng, o) for o in outcomes]
    write_store(root, name, {"prompt_id": "linguistic", "model_name": model, "context": context,
                             "description": f"{model} linguistic runs, {context} context"},
                texts)


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else
                        pathlib.Path(__file__).resolve().parent.parent / "tests/fixtures/replay")
    root.mkdir(parents=True, exist_ok=True)

    # Integrity: run 0 of the first store flags only the output volume.
    chatgpt = [{"90"}] * 20
    chatgpt[13] = None
    integrity_store(root, "integrity_chatgpt", "chatgpt-plus-o3", 101, chatgpt)

    gemini = [{"90", "40"}] * 20
    gemini[6] = {"90"}
    gemini[15] = {"40"}
    integrity_store(root, "integrity_gemini", "gemini-2.5-pro", 102, gemini)

    # Linguistic: (store, model, context, runs, failures by kind, seed).
    series = [
        ("linguistic_chatgpt_b_limited", "chatgpt-plus-o3", "limited", 20, {}, 201),
        ("linguistic_chatgpt_a_full", "chatgpt-plus-o3", "full", 20,
         {"none": 2, "concept_only": 1}, 202),
        ("linguistic_chatgpt_b_full", "chatgpt-plus-o3", "full", 20,
         {"none": 2, "concept_only": 1, "prose": 1}, 203),
        ("linguistic_gemini_a_limited", "gemini-2.5-pro", "limited", 21,
         {"none": 5, "concept_only": 2, "scope_supported": 1, "prose": 1}, 301),
        ("linguistic_gemini_b_limited", "gemini-2.5-pro", "limited", 40,
         {"none": 16, "concept_only": 6, "scope_supported": 3, "prose": 1}, 302),
        ("linguistic_gemini_c_limited", "gemini-2.5-pro", "limited", 40,
         {"none": 11, "concept_only": 5, "scope_supported": 2, "prose": 1}, 303),
        ("linguistic_gemini_a_full", "gemini-2.5-pro", "full", 20,
         {"none": 3, "concept_only": 2, "scope_supported": 1}, 304),
        ("linguistic_gemini_b_full", "gemini-2.5-pro", "full", 40,
         {"none": 3, "concept_only": 2, "prose": 1}, 305),
        ("linguistic_gemini_c_full", "gemini-2.5-pro", "full", 40,
         {"none": 2, "concept_only": 2, "scope_supported": 1}, 306),
    ]
    for name, model, context, n, failures, seed in series:
        rng = random.Random(seed)
        outcomes = place(rng, n, failures)
        if name == "linguistic_chatgpt_a_full" and outcomes[7] == "hit":
            # Run 7 is excluded in the config; keep it a miss so that counting
            # it would change the printed rate.
            miss = next(i for i, o in enumerate(outcomes) if o != "hit")
            outcomes[7], outcomes[miss] = outcomes[miss], outcomes[7]
        linguistic_store(root, name, model, context, seed, outcomes)


if __name__ == "__main__":
    main()
