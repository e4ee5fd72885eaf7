"""One-off generator for the bundled demonstration corpus.

Produces 20 small documents in two class subdirectories (grain farming /
shipping) with controlled properties: every document mentions "harvest"
exactly once and "market" several times, and every document keeps well
over 100 tokens after stopword removal, so each weighting scheme removes
at least one term under the default thresholds.

Run from the repository root:  python tools/make_minicorpus.py
"""

import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "termsift" / "data" / "minicorpus"

GRAIN = """wheat grain corn barley field farmer tractor plough soil seed crop yield
rain drought summer winter price trade export tonne bushel storage silo mill flour
bread cattle livestock acre fertilizer sowing planting growers region province
surplus quota subsidy inspection quality moisture protein delivery elevator
railway contract buyer seller auction forecast estimate production county""".split()

SHIPPING = """ship vessel cargo port harbour dock container freight tanker crew
captain voyage sea ocean route canal anchor deck hull engine fuel insurance
charter tugboat berth manifest customs inspection loading unloading ballast
draft tonnage registry flag owner operator schedule delay storm navigation
pilot channel terminal crane warehouse shipment consignment""".split()

SHARED = """market price trade export government report season agreement bank
exchange demand supply economy minister official statement announcement
negotiation committee analyst review policy figure total increase decrease""".split()

TEMPLATES = [
    "The {a} {b} was discussed before the {c} {d} this season.",
    "Officials said the {a} {b} could affect the {c} and the {d}.",
    "A new {a} report shows the {b} rising against the {c} {d}.",
    "Traders expect the {a} to move once the {b} reaches the {c} {d}.",
    "The {a} and the {b} remain under review by the {c} {d} committee.",
]


def make_doc(rng: random.Random, pool: list[str]) -> str:
    words = pool + SHARED
    sentences = []
    # harvest appears exactly once, early, in a fixed sentence shape
    sentences.append(
        f"The yearly harvest outlook dominated the {rng.choice(words)} "
        f"{rng.choice(words)} discussion."
    )
    for _ in range(rng.randint(2, 4)):
        sentences.append(f"The {rng.choice(words)} market followed the {rng.choice(words)} market.")
    while sum(s.count(" ") + 1 for s in sentences) < 190:
        t = rng.choice(TEMPLATES)
        sentences.append(
            t.format(a=rng.choice(words), b=rng.choice(words),
                     c=rng.choice(words), d=rng.choice(words))
        )
    return "\n".join(sentences) + "\n"


def main() -> None:
    rng = random.Random(20260824)
    for label, pool in (("grainfarm", GRAIN), ("shipping", SHIPPING)):
        d = OUT / label
        d.mkdir(parents=True, exist_ok=True)
        for i in range(10):
            (d / f"doc{i:02d}.txt").write_text(make_doc(rng, pool), encoding="utf-8")
    print(f"wrote 20 documents under {OUT}")


if __name__ == "__main__":
    main()
