/**
 * Built-in 5x7 bitmap font (lowercase, digits, light punctuation).
 *
 * Shipping the glyphs keeps PNG output independent of system fonts;
 * all figure text is lowercase by convention. Each glyph is 7 rows of
 * 5 bits, written as '#'/'.' art and parsed once at load.
 */

const ART: Record<string, string> = {
  "0": "01110 10001 10011 10101 11001 10001 01110",
  "1": "00100 01100 00100 00100 00100 00100 01110",
  "2": "01110 10001 00001 00010 00100 01000 11111",
  "3": "11111 00010 00100 00010 00001 10001 01110",
  "4": "00010 00110 01010 10010 11111 00010 00010",
  "5": "11111 10000 11110 00001 00001 10001 01110",
  "6": "00110 01000 10000 11110 10001 10001 01110",
  "7": "11111 00001 00010 00100 01000 01000 01000",
  "8": "01110 10001 10001 01110 10001 10001 01110",
  "9": "01110 10001 10001 01111 00001 00010 01100",
  a: "00000 00000 01110 00001 01111 10001 01111",
  b: "10000 10000 10110 11001 10001 10001 11110",
  c: "00000 00000 01110 10000 10000 10001 01110",
  d: "00001 00001 01101 10011 10001 10001 01111",
  e: "00000 00000 01110 10001 11111 10000 01110",
  f: "00110 01001 01000 11100 01000 01000 01000",
  g: "00000 01111 10001 10001 01111 00001 01110",
  h: "10000 10000 10110 11001 10001 10001 10001",
  i: "00100 00000 01100 00100 00100 00100 01110",
  j: "00010 00000 00110 00010 00010 10010 01100",
  k: "10000 10000 10010 10100 11000 10100 10010",
  l: "01100 00100 00100 00100 00100 00100 01110",
  m: "00000 00000 11010 10101 10101 10101 10101",
  n: "00000 00000 10110 11001 10001 10001 10001",
  o: "00000 00000 01110 10001 10001 10001 01110",
  p: "00000 00000 11110 10001 11110 10000 10000",
  q: "00000 00000 01101 10011 01111 00001 00001",
  r: "00000 00000 10110 11001 10000 10000 10000",
  s: "00000 00000 01111 10000 01110 00001 11110",
  t: "01000 01000 11100 01000 01000 01001 00110",
  u: "00000 00000 10001 10001 10001 10011 01101",
  v: "00000 00000 10001 10001 10001 01010 00100",
  w: "00000 00000 10001 10101 10101 10101 01010",
  x: "00000 00000 10001 01010 00100 01010 10001",
  y: "00000 00000 10001 10001 01111 00001 01110",
  z: "00000 00000 11111 00010 00100 01000 11111",
  " ": "00000 00000 00000 00000 00000 00000 00000",
  ".": "00000 00000 00000 00000 00000 01100 01100",
  ",": "00000 00000 00000 00000 01100 00100 01000",
  "-": "00000 00000 00000 01110 00000 00000 00000",
  "+": "00000 00100 00100 11111 00100 00100 00000",
  "=": "00000 00000 01110 00000 01110 00000 00000",
  "(": "00010 00100 01000 01000 01000 00100 00010",
  ")": "01000 00100 00010 00010 00010 00100 01000",
  "/": "00001 00001 00010 00100 01000 10000 10000",
  ":": "00000 01100 01100 00000 01100 01100 00000",
  "|": "00100 00100 00100 00100 00100 00100 00100",
  "[": "01110 01000 01000 01000 01000 01000 01110",
  "]": "01110 00010 00010 00010 00010 00010 01110",
};

/** shown for characters outside the glyph set */
const FALLBACK = "11111 10001 10001 10001 10001 10001 11111";

function parse(art: string): number[] {
  return art.split(" ").map((row) => parseInt(row, 2));
}

const GLYPHS = new Map<string, number[]>(
  Object.entries(ART).map(([ch, art]) => [ch, parse(art)]),
);
const FALLBACK_ROWS = parse(FALLBACK);

/** 7 row bitmasks (bit 4 = leftmost column) for a character. */
export function glyphRows(ch: string): number[] {
  return GLYPHS.get(ch) ?? FALLBACK_ROWS;
}

export function hasGlyph(ch: string): boolean {
  return GLYPHS.has(ch);
}
