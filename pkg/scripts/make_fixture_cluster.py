#!/usr/bin/env python3
"""Regenerate the bundled demo cluster under data/fixture_cluster.

Ten synthetic news-style articles about a coastal storm. The articles
share a pool of recurring two-word topic phrases, article00 covers every
shared phrase (making it the natural centroid), and each article adds a
private phrase of its own. Output is deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import random
import re
from pathlib import Path

SHARED_PHRASES = [
    "flood warning",
    "storm surge",
    "coastal road",
    "relief agency",
    "water level",
    "emergency shelter",
    "power outage",
    "evacuation order",
    "rescue team",
    "harbor wall",
    "supply convoy",
    "rainfall record",
    "river basin",
    "fishing fleet",
    "weather bureau",
]

PRIVATE_PHRASES = [
    "insurance claims",
    "school closures",
    "rail line",
    "bridge repair",
    "farm losses",
    "tourism season",
    "drinking water",
    "volunteer corps",
    "medical clinic",
    "radio bulletin",
]

SUBJECTS = [
    "Officials",
    "Residents",
    "Crews",
    "Engineers",
    "Volunteers",
    "Forecasters",
    "Reporters",
    "Planners",
]

VERBS = [
    "reported",
    "confirmed",
    "monitored",
    "described",
    "assessed",
    "discussed",
    "praised",
    "questioned",
]

TAILS = [
    "through the night",
    "on monday",
    "along the coast",
    "for a second day",
    "across the district",
    "near the harbor",
    "by early evening",
    "without much rest",
    "despite the wind",
    "after the briefing",
]

FILLERS = [
    "little change",
    "steady progress",
    "minor damage",
    "slow traffic",
    "calm conditions",
    "broad support",
]

_WORD = re.compile(r"[^\W_]+", re.UNICODE)


def word_count(sentence: str) -> int:
    return len(_WORD.findall(sentence))


def topic_sentence(rng: random.Random, phrase: str) -> str:
    kind = rng.randrange(3)
    if kind == 0:
        return (
            f"{rng.choice(SUBJECTS)} {rng.choice(VERBS)} the {phrase} "
            f"{rng.choice(TAILS)}."
        )
    if kind == 1:
        return f"The {phrase} remained in place {rng.choice(TAILS)}."
    return f"Updates on the {phrase} arrived {rng.choice(TAILS)}."


def filler_sentence(rng: random.Random) -> str:
    return (
        f"{rng.choice(SUBJECTS)} {rng.choice(VERBS)} {rng.choice(FILLERS)} "
        f"{rng.choice(TAILS)}."
    )


def build_article(
    rng: random.Random,
    shared: list[str],
    private: str,
    target_words: int,
) -> str:
    sentences = []
    for phrase in shared:
        for _ in range(rng.randint(1, 2)):
            sentences.append(topic_sentence(rng, phrase))
    for _ in range(rng.randint(1, 2)):
        sentences.append(topic_sentence(rng, private))
    while sum(word_count(s) for s in sentences) < target_words:
        sentences.append(filler_sentence(rng))
    rng.shuffle(sentences)
    # Paragraphs of three to five sentences, blank line separated.
    paragraphs = []
    i = 0
    while i < len(sentences):
        size = rng.randint(3, 5)
        paragraphs.append(" ".join(sentences[i : i + size]))
        i += size
    return "\n\n".join(paragraphs) + "\n"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("data/fixture_cluster"))
    parser.add_argument("--seed", type=int, default=20240811)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    args.out.mkdir(parents=True, exist_ok=True)
    for i in range(10):
        if i == 0:
            shared = list(SHARED_PHRASES)
        else:
            shared = rng.sample(SHARED_PHRASES, rng.randint(5, 9))
        target = rng.randint(335, 365)
        text = build_article(rng, shared, PRIVATE_PHRASES[i], target)
        path = args.out / f"article{i:02d}.txt"
        path.write_text(text, encoding="utf-8")
        print(f"wrote {path} ({word_count(text)} words)")


if __name__ == "__main__":
    main()
