// Pointer-to-target mapping. Holding the modifier key rescales motion to
// a tenth around the anchor point, for sub-pixel target placement.

export const FINE_SCALE = 0.1;

export class FinePointer {
  private fine = false;
  private anchorRaw: [number, number] | null = null;
  private anchorEffective: [number, number] | null = null;
  private lastEffective: [number, number] | null = null;

  /** Effective pixel position for a raw pointer position. */
  move(px: number, py: number, fineHeld: boolean): [number, number] {
    if (fineHeld && !this.fine) {
      // entering fine mode: anchor at the current state
      this.anchorRaw = [px, py];
      this.anchorEffective = this.lastEffective ?? [px, py];
    }
    this.fine = fineHeld;
    let eff: [number, number];
    if (fineHeld && this.anchorRaw && this.anchorEffective) {
      eff = [
        this.anchorEffective[0] + FINE_SCALE * (px - this.anchorRaw[0]),
        this.anchorEffective[1] + FINE_SCALE * (py - this.anchorRaw[1]),
      ];
    } else {
      eff = [px, py];
      this.anchorRaw = null;
      this.anchorEffective = null;
    }
    this.lastEffective = eff;
    return eff;
  }
}
