#!/usr/bin/env python3
"""One-shot generator for the bundled lexicon files.

Writes stopwords_id.txt (exactly 757 entries), normalization_id.tsv,
rootwords_id.txt and thesaurus_id.tsv into data/, then cross-checks the
consistency rules the pipeline's idempotence relies on:

  * root words never appear in the stopword list or as normalization keys
  * normalization values are never normalization keys (no chains)
  * protected sample-table terms are never stopwords or normalization keys
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))
import vocab_id as V

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"
TARGET_STOPWORDS = 757

CLITICS = ["lah", "kah", "nya", "pun", "ku", "mu"]


def build_stopwords():
    roots = set(V.ALL_ROOTS)
    banned = V.PROTECTED_TERMS | roots
    words = []
    seen = set()

    def add(w):
        if w and w not in seen and w not in banned and " " not in w:
            seen.add(w)
            words.append(w)

    for base in V.STOPWORD_BASES:
        add(base)
    # clitic-expanded variants, the way published Indonesian lists grow
    for base in V.STOPWORD_BASES:
        for suffix in CLITICS:
            if len(words) >= TARGET_STOPWORDS:
                break
            if base.endswith(suffix):
                continue
            add(base + suffix)
        if len(words) >= TARGET_STOPWORDS:
            break

    if len(words) < TARGET_STOPWORDS:
        raise SystemExit(
            f"only {len(words)} stopword candidates; add more bases")
    return sorted(words[:TARGET_STOPWORDS])


def main():
    DATA.mkdir(exist_ok=True)

    stopwords = build_stopwords()
    roots = list(V.ALL_ROOTS)
    norm = dict(sorted(V.NORMALIZATION.items()))
    thesaurus = dict(sorted(V.THESAURUS.items()))

    # consistency rules
    stop_set = set(stopwords)
    root_set = set(roots)
    assert "yang" in stop_set, "yang must be a stopword"
    assert len(stopwords) == TARGET_STOPWORDS
    assert not (root_set & stop_set), root_set & stop_set
    assert not (root_set & set(norm)), root_set & set(norm)
    assert not (V.PROTECTED_TERMS & stop_set), V.PROTECTED_TERMS & stop_set
    assert not ((V.PROTECTED_TERMS - {"org"}) & set(norm))
    for key, value in norm.items():
        assert key != value, key
        assert value not in norm, f"chained normalization {key}->{value}"
    for head, syns in thesaurus.items():
        assert head not in syns, head
        assert len(syns) == len(set(syns)), head
    assert "oplas" not in root_set
    assert "makan" in root_set
    assert norm["org"] == "orang"
    assert "heran" in thesaurus["aneh"]
    assert "cetakan" in thesaurus["foto"]

    (DATA / "stopwords_id.txt").write_text("\n".join(stopwords) + "\n")
    (DATA / "rootwords_id.txt").write_text("\n".join(sorted(roots)) + "\n")
    (DATA / "normalization_id.tsv").write_text(
        "".join(f"{k}\t{v}\n" for k, v in norm.items()))
    (DATA / "thesaurus_id.tsv").write_text(
        "".join(f"{k}\t{','.join(v)}\n" for k, v in thesaurus.items()))

    print(f"stopwords: {len(stopwords)}")
    print(f"roots: {len(roots)}")
    print(f"normalization: {len(norm)}")
    print(f"thesaurus: {len(thesaurus)}")


if __name__ == "__main__":
    main()
