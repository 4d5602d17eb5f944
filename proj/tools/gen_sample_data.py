#!/usr/bin/env python3
"""Regenerates the sample deck and lexicon under data/.

Cards carry 3-4 concept tags and an 8-dimensional feature vector built from
the same concepts plus noise, so the tag and feature association models
agree roughly but not exactly. Output is deterministic.
"""

import json
import math
import pathlib
import random

CONCEPTS = [
    "moon", "sea", "door", "child", "clock", "tree", "fire", "bird",
    "dream", "mask", "key", "stair", "rain", "crown", "snail", "lantern",
    "mirror", "dragon", "garden", "storm", "shadow", "ship", "tower", "wolf",
    "music", "book", "feather", "island", "maze", "star", "journey", "secret",
    "balloon", "rabbit", "bridge", "cage", "dance", "flower", "giant", "ice",
]
DIM = 8


def unit(v):
    norm = math.sqrt(sum(x * x for x in v)) or 1.0
    return [round(x / norm, 6) for x in v]


def main():
    rng = random.Random(20260417)
    root = pathlib.Path(__file__).resolve().parent.parent / "data"
    basis = {c: unit([rng.gauss(0, 1) for _ in range(DIM)]) for c in CONCEPTS}

    with open(root / "deck84.jsonl", "w") as deck:
        for i in range(84):
            tags = sorted(rng.sample(CONCEPTS, rng.choice([3, 4])))
            vec = [rng.gauss(0, 0.35) for _ in range(DIM)]
            for t in tags:
                vec = [a + b for a, b in zip(vec, basis[t])]
            card = {"id": f"c{i + 1:03d}", "tags": tags,
                    "features": unit(vec),
                    "image_ref": f"cards/c{i + 1:03d}.png"}
            deck.write(json.dumps(card) + "\n")

    phrases = [[c] for c in CONCEPTS]
    seen = set()
    while len(phrases) < 100:
        pair = tuple(sorted(rng.sample(CONCEPTS, 2)))
        if pair not in seen:
            seen.add(pair)
            phrases.append(list(pair))
    with open(root / "lexicon.jsonl", "w") as lex:
        for tokens in phrases:
            vec = [0.0] * DIM
            for t in tokens:
                vec = [a + b for a, b in zip(vec, basis[t])]
            lex.write(json.dumps({"tokens": tokens, "vector": unit(vec)}) + "\n")


if __name__ == "__main__":
    main()
