#!/usr/bin/env python3
"""One-shot generator for the bundled 400-comment corpus.

Produces data/comments.csv with the same schema as the public Instagram
cyberbullying dataset (columns "Instagram Comment Text" and "Sentiment",
200 rows per class). The text is synthetic Indonesian social-media style:
slang, mentions, emoji, uneven punctuation.

--hard controls the fraction of ambiguous comments (mixed or weak
sentiment vocabulary); --flip controls the fraction of mislabeled rows.
Both exist so the bundled corpus lands in a realistic difficulty band
rather than being trivially separable.
"""

import argparse
import csv
import pathlib
import random
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))
import vocab_id as V

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

USERS = ["nindy", "rafif", "bunga", "dila", "yoga", "sinta", "bayu",
         "tasya", "rendi", "mawar", "putra", "vina"]

EMOJI_POS = ["😍", "❤️", "🔥", "👍", "✨", "🥰", ""]
EMOJI_NEG = ["🤮", "💩", "😒", "🙄", "👎", ""]

SUBJECTS = ["kak", "bang", "mbak", "mas", "bro", "sis", "kakak", "om",
            "tante", "beb", "gan"]

POS_INTROS = ["wah", "waduh", "masyaallah", "ya ampun", "duh", "aduh", ""]
NEG_INTROS = ["ih", "hadeh", "dih", "yaelah", "halah", "cih", ""]

FILLERS = ["banget", "bgt", "amat", "sekali", "parah", "pol", "abis",
           "sumpah", "asli", "beneran", "bener2"]

SLANG_POS = ["kece", "gemoy", "estetik", "aesthetic", "glowing", "goals",
             "keceh", "cucok"]
SLANG_NEG = ["oplas", "sok", "caper", "pansos", "settingan", "julid",
             "flexing", "receh", "cringe", "bucin"]

NEUTRAL_BITS = [
    "yg di posting kemarin", "pas acara itu", "di foto ini", "sm temen2",
    "waktu live kemarin", "di video barunya", "pas konser", "di story",
    "yg skrg", "dr dulu", "akhir2 ini", "tiap hari", "pas di tv",
]


def pick(rng, pool, k=1):
    return rng.sample(pool, k) if k > 1 else [rng.choice(pool)]


def positive_core(rng, n_sent):
    words = pick(rng, V.POSITIVE_ROOTS, n_sent)
    topic = rng.choice(V.TOPIC_ROOTS)
    shapes = [
        "{topic} nya {s0} {fill}",
        "{s0} {fill} {subj} {topic} nya",
        "sumpah {topic} kamu {s0} {fill}",
        "makin {s0} aja {topic} nya",
        "{s0} dan {s1} {fill} {topic} nya",
        "{topic} {s0} gini emg {slang}",
        "suka bgt sm {topic} nya {s0}",
        "semoga makin {s0} ya {subj}",
        "selalu {s0} deh pokoknya",
        "{s0} {s1} {topic} nya gila",
    ]
    shape = rng.choice(shapes)
    return shape.format(
        topic=rng.choice([topic, topic]),
        s0=words[0],
        s1=words[1 % n_sent] if n_sent > 1 else words[0],
        fill=rng.choice(FILLERS),
        subj=rng.choice(SUBJECTS),
        slang=rng.choice(SLANG_POS),
    )


def negative_core(rng, n_sent):
    words = pick(rng, V.NEGATIVE_ROOTS, n_sent)
    topic = rng.choice(V.TOPIC_ROOTS)
    shapes = [
        "{topic} lo {s0} {fill}",
        "dasar {s0} {s1}",
        "{s0} bgt {topic} nya najis",
        "{topic} gini kok {s0} amat",
        "udah {s0} {s1} lagi",
        "{slang} bgt sih {s0}",
        "muka {s0} gini ngaca dulu",
        "{s0} lo itu {fill} keliatan",
        "oplas gagal tuh {topic} nya {s0}",
        "ga usah {slang} {topic} lo {s0}",
    ]
    shape = rng.choice(shapes)
    return shape.format(
        topic=topic,
        s0=words[0],
        s1=words[1 % n_sent] if n_sent > 1 else words[0],
        fill=rng.choice(FILLERS),
        slang=rng.choice(SLANG_NEG),
    )


def hard_core(rng, label):
    """Weak or mixed sentiment: one weak cue plus the other side's word."""
    pos = rng.choice(V.POSITIVE_ROOTS)
    neg = rng.choice(V.NEGATIVE_ROOTS)
    topic = rng.choice(V.TOPIC_ROOTS)
    verb = rng.choice(V.VERB_ROOTS)
    if label == "positive":
        shapes = [
            f"awalnya kirain {neg} ternyata {pos} juga {topic} nya",
            f"ga {neg} kok menurutku {pos} aja",
            f"biasa aja sih tp lumayan {pos} {topic} nya",
            f"{topic} nya {pos} walau agak {neg} dikit",
            f"yaa {pos} lah dibanding yg kemarin {neg} itu",
        ]
    else:
        shapes = [
            f"katanya {pos} tp aslinya {neg} bgt",
            f"sok {pos} padahal {neg} asli",
            f"{topic} nya keliatan {pos} tp tetep {neg}",
            f"dibilang {pos} dikit langsung belagu dasar {neg}",
            f"mau {verb} kayak gimana juga tetep {neg}",
        ]
    return rng.choice(shapes)


def decorate(rng, core, label):
    parts = []
    if rng.random() < 0.25:
        parts.append("@" + rng.choice(USERS) + str(rng.randint(1, 99)))
    intro = rng.choice(POS_INTROS if label == "positive" else NEG_INTROS)
    if intro and rng.random() < 0.5:
        parts.append(intro)
    parts.append(core)
    if rng.random() < 0.3:
        parts.append(rng.choice(NEUTRAL_BITS))
    text = " ".join(p for p in parts if p)
    punct = rng.choice(["", ".", "!", "!!", "!!!", "...", "?", " :)"])
    emoji = rng.choice(EMOJI_POS if label == "positive" else EMOJI_NEG)
    if rng.random() < 0.4 and emoji:
        text += " " + emoji
    text += punct
    if rng.random() < 0.15:
        text = text.upper() if rng.random() < 0.3 else text.capitalize()
    return text


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20240731)
    ap.add_argument("--per-class", type=int, default=200)
    ap.add_argument("--hard", type=float, default=0.15,
                    help="fraction of ambiguous comments")
    ap.add_argument("--flip", type=float, default=0.06,
                    help="fraction of mislabeled comments")
    ap.add_argument("--out", default=str(DATA / "comments.csv"))
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rows = []
    for label in ("positive", "negative"):
        for _ in range(args.per_class):
            r = rng.random()
            if r < args.flip:
                # mislabeled: clean text of the opposite polarity
                other = "negative" if label == "positive" else "positive"
                core = (positive_core(rng, rng.randint(1, 2))
                        if other == "positive"
                        else negative_core(rng, rng.randint(1, 2)))
                text = decorate(rng, core, other)
            elif r < args.flip + args.hard:
                text = decorate(rng, hard_core(rng, label), label)
            else:
                core = (positive_core(rng, rng.randint(1, 2))
                        if label == "positive"
                        else negative_core(rng, rng.randint(1, 2)))
                text = decorate(rng, core, label)
            rows.append((text, label))

    rng.shuffle(rows)
    with open(args.out, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["Instagram Comment Text", "Sentiment"])
        w.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.out}")


if __name__ == "__main__":
    main()
