#!/usr/bin/env python3
"""Download the 38-play corpus as plain text.

Fetches each play's single-page HTML from shakespeare.mit.edu (the Moby
public-domain edition), strips markup, and writes data/shakespeare/texts/.
The Two Noble Kinsmen is not part of that edition; it must be added by hand
from another public-domain source (e.g. gutenberg.org ebook 1542).

After fetching, copy manifest.template.csv to manifest.csv and fill in the
33 missing year labels; the toolkit refuses a manifest with blank years.

Usage: python3 scripts/fetch_corpus.py [--dest DIR]
"""

import argparse
import html.parser
import pathlib
import sys
import time
import urllib.request

BASE = "http://shakespeare.mit.edu/{slug}/full.html"

# manifest id -> site slug
SLUGS = {
    "allswell": "allswell",
    "asyoulikeit": "asyoulikeit",
    "comedy_errors": "comedy_errors",
    "lll": "lll",
    "measure": "measure",
    "merry_wives": "merry_wives",
    "midsummer": "midsummer",
    "much_ado": "much_ado",
    "taming_shrew": "taming_shrew",
    "tempest": "tempest",
    "twelfth_night": "twelfth_night",
    "two_gentlemen": "two_gentlemen",
    "winters_tale": "winters_tale",
    "cleopatra": "cleopatra",
    "coriolanus": "coriolanus",
    "hamlet": "hamlet",
    "julius_caesar": "julius_caesar",
    "lear": "lear",
    "macbeth": "macbeth",
    "othello": "othello",
    "rj": "romeo_juliet",
    "timon": "timon",
    "titus": "titus",
    "john": "john",
    "richardii": "richardii",
    "richardiii": "richardiii",
    "1henryiv": "1henryiv",
    "2henryiv": "2henryiv",
    "henryv": "henryv",
    "1henryvi": "1henryvi",
    "2henryvi": "2henryvi",
    "3henryvi": "3henryvi",
    "henryviii": "henryviii",
    "merchant": "merchant",
    "troilus_cressida": "troilus_cressida",
    "pericles": "pericles",
    "cymbeline": "cymbeline",
}

MISSING = {"tnk": "not in the MIT edition; add texts/tnk.txt manually "
                  "(public domain, e.g. gutenberg.org ebook 1542)"}


class TextExtractor(html.parser.HTMLParser):
    BLOCK_ENDS = {"p", "blockquote", "h1", "h2", "h3", "table", "tr", "div"}
    SKIP = {"script", "style"}

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.parts = []
        self.skip_depth = 0

    def handle_starttag(self, tag, attrs):
        if tag in self.SKIP:
            self.skip_depth += 1
        elif tag == "br":
            self.parts.append("\n")

    def handle_endtag(self, tag):
        if tag in self.SKIP:
            self.skip_depth = max(0, self.skip_depth - 1)
        elif tag in self.BLOCK_ENDS:
            self.parts.append("\n")

    def handle_data(self, data):
        if not self.skip_depth:
            self.parts.append(data)

    def text(self):
        raw = "".join(self.parts)
        lines = [ln.strip() for ln in raw.split("\n")]
        out = []
        blank = True
        for ln in lines:
            if ln:
                out.append(ln)
                blank = False
            elif not blank:
                out.append("")
                blank = True
        return "\n".join(out).strip() + "\n"


def fetch(url):
    req = urllib.request.Request(url, headers={"User-Agent": "corpus-fetch/1.0"})
    with urllib.request.urlopen(req, timeout=60) as resp:
        return resp.read().decode("utf-8", errors="replace")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dest", default=None, help="output directory for texts/")
    args = ap.parse_args()

    root = pathlib.Path(__file__).resolve().parent.parent
    dest = pathlib.Path(args.dest) if args.dest else root / "data" / "shakespeare" / "texts"
    dest.mkdir(parents=True, exist_ok=True)

    failures = []
    for play_id, slug in sorted(SLUGS.items()):
        out = dest / f"{play_id}.txt"
        if out.exists():
            print(f"  {play_id}: already present, skipping")
            continue
        url = BASE.format(slug=slug)
        try:
            page = fetch(url)
        except Exception as e:  # noqa: BLE001
            failures.append(play_id)
            print(f"  {play_id}: FAILED ({e})", file=sys.stderr)
            continue
        extractor = TextExtractor()
        extractor.feed(page)
        out.write_text(extractor.text(), encoding="utf-8")
        print(f"  {play_id}: wrote {out}")
        time.sleep(0.5)

    for play_id, note in MISSING.items():
        print(f"  {play_id}: {note}")
    if failures:
        print(f"{len(failures)} downloads failed: {' '.join(failures)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
