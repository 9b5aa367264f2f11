"""Verification transcripts for the supporting lemmas."""
from semisym import builtin, lemma_transcript
from semisym.elementarize import LEMMAS

for name in ["super:3", "sat:3"]:
    sr = builtin(name)
    for lemma in LEMMAS:
        print(lemma_transcript(sr, lemma).to_text())
    print()
