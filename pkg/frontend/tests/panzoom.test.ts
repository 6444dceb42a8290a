import { describe, expect, it } from 'vitest'

import { fitViewBox, panViewBox, viewBoxAttr, zoomViewBox } from '../src/panzoom'

describe('viewBox math', () => {
  const fitted = fitViewBox(200, 100)

  it('fit covers the whole scene', () => {
    expect(fitted).toEqual({ x: 0, y: 0, width: 200, height: 100 })
    expect(viewBoxAttr(fitted)).toBe('0.00 0.00 200.00 100.00')
  })

  it('zooming in keeps the anchor point fixed', () => {
    const vb = zoomViewBox(fitted, 2, 50, 25, fitted)
    expect(vb.width).toBeCloseTo(100)
    expect(vb.height).toBeCloseTo(50)
    // (50, 25) must map to the same relative position
    expect((50 - vb.x) / vb.width).toBeCloseTo((50 - fitted.x) / fitted.width)
    expect((25 - vb.y) / vb.height).toBeCloseTo((25 - fitted.y) / fitted.height)
  })

  it('zoom out then in round-trips', () => {
    const out = zoomViewBox(fitted, 0.5, 100, 50, fitted)
    const back = zoomViewBox(out, 2, 100, 50, fitted)
    expect(back.x).toBeCloseTo(fitted.x)
    expect(back.y).toBeCloseTo(fitted.y)
    expect(back.width).toBeCloseTo(fitted.width)
  })

  it('clamps extreme zoom levels', () => {
    let vb = fitted
    for (let i = 0; i < 100; i++) vb = zoomViewBox(vb, 2, 0, 0, fitted)
    expect(vb.width).toBeGreaterThan(0)
    expect(vb.width).toBeGreaterThanOrEqual(fitted.width / 64 - 1e-9)
    for (let i = 0; i < 200; i++) vb = zoomViewBox(vb, 0.5, 0, 0, fitted)
    expect(vb.width).toBeLessThanOrEqual(fitted.width * 64 + 1e-9)
  })

  it('pan shifts the origin only', () => {
    const vb = panViewBox(fitted, 10, -5)
    expect(vb).toEqual({ x: 10, y: -5, width: 200, height: 100 })
  })

  it('preserves aspect ratio under any zoom', () => {
    let vb = fitted
    for (const factor of [1.25, 0.8, 3, 0.1, 1.7]) {
      vb = zoomViewBox(vb, factor, 33, 77, fitted)
      expect(vb.width / vb.height).toBeCloseTo(fitted.width / fitted.height)
    }
  })
})
