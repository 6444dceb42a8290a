// Parsing for the flat test-table inputs. This is UI sugar only: the
// assignment text becomes the JSON the service expects, and the expected
// field is passed through verbatim unless it is a plain boolean literal.

import type { TestRow } from './types.js'

export class TestFormError extends Error {
  constructor(message: string) {
    super(message)
    this.name = 'TestFormError'
  }
}

const NAME = /^[A-Za-z][A-Za-z0-9_]*$/
const TRUE_WORDS = new Set(['true', '1', 't'])
const FALSE_WORDS = new Set(['false', '0', 'f'])

/** Parse "p=true q=false, r=1" into an assignment record. */
export function parseAssignment(text: string): Record<string, boolean> {
  const assign: Record<string, boolean> = {}
  const pairs = text.split(/[\s,;]+/).filter((part) => part.length > 0)
  if (pairs.length === 0) throw new TestFormError('empty assignment')
  for (const pair of pairs) {
    const eq = pair.indexOf('=')
    if (eq < 0) throw new TestFormError(`expected name=value, got "${pair}"`)
    const name = pair.slice(0, eq).trim()
    const value = pair.slice(eq + 1).trim().toLowerCase()
    if (!NAME.test(name)) throw new TestFormError(`bad variable name "${name}"`)
    if (name in assign) throw new TestFormError(`duplicate variable "${name}"`)
    if (TRUE_WORDS.has(value)) assign[name] = true
    else if (FALSE_WORDS.has(value)) assign[name] = false
    else throw new TestFormError(`bad value "${value}" for "${name}"`)
  }
  return assign
}

/** "true"/"false" become booleans; anything else is an expected
 * expression forwarded verbatim for the server to parse. */
export function parseExpected(text: string): boolean | string {
  const word = text.trim()
  if (word.length === 0) throw new TestFormError('empty expected value')
  if (word.toLowerCase() === 'true') return true
  if (word.toLowerCase() === 'false') return false
  return word
}

export function buildTestRow(id: string, assignText: string, expectText: string): TestRow {
  return {
    id,
    assign: parseAssignment(assignText),
    expect: parseExpected(expectText),
  }
}
