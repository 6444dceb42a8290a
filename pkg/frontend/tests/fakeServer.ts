// In-memory stand-in for the formt service, answering with JSON captured
// from the real server (tests/fixtures). State is just the test list; the
// canned scene/report pair switches once a test with an all-false
// assignment is present, matching what the real service computes.

import type { FetchLike } from '../src/api'
import type { TestRow } from '../src/types'

import projectSummary from './fixtures/project_summary.json'
import reportEmpty from './fixtures/report_empty.json'
import reportKilled from './fixtures/report_killed.json'
import sceneEmpty from './fixtures/scene_empty.json'
import sceneKilled from './fixtures/scene_killed.json'
import sceneKilledSector from './fixtures/scene_killed_sector.json'
import nodeLogic from './fixtures/node0_logic.json'

function json(data: unknown, status = 200): Response {
  return new Response(JSON.stringify(data), {
    status,
    headers: { 'Content-Type': 'application/json' },
  })
}

function errorBody(status: number, code: string, message: string): Response {
  return json({ error: { code, message, detail: null } }, status)
}

export class FakeServer {
  tests: TestRow[] = []
  evaluated = false
  requests: string[] = []
  /** when set, /evaluate stalls until release() is called */
  holdEvaluate = false
  private pending: Array<() => void> = []

  release(): void {
    for (const resolve of this.pending.splice(0)) resolve()
  }

  private hasAllFalseTest(): boolean {
    return this.tests.some(
      (test) =>
        Object.keys(test.assign).length === 4 &&
        Object.values(test.assign).every((value) => value === false),
    )
  }

  fetch: FetchLike = async (url, init) => {
    const method = init?.method ?? 'GET'
    const target = new URL(url, 'http://fake')
    this.requests.push(`${method} ${target.pathname}${target.search}`)

    if (method === 'POST' && target.pathname === '/project') {
      this.tests = []
      this.evaluated = false
      return json(projectSummary)
    }
    if (method === 'PUT' && target.pathname === '/tests') {
      const body = JSON.parse(String(init?.body)) as { tests: TestRow[] }
      this.tests = body.tests
      this.evaluated = false
      return json({ tests: this.tests.length, originFailures: [] })
    }
    if (method === 'POST' && target.pathname === '/tests') {
      this.tests.push(JSON.parse(String(init?.body)) as TestRow)
      this.evaluated = false
      return json({ tests: this.tests.length, originFailures: [] })
    }
    if (method === 'POST' && target.pathname === '/evaluate') {
      if (this.holdEvaluate) {
        await new Promise<void>((resolve) => this.pending.push(resolve))
      }
      this.evaluated = true
      return json(this.hasAllFalseTest() ? reportKilled : reportEmpty)
    }
    if (method === 'GET' && target.pathname === '/scene') {
      const grouping = target.searchParams.get('grouping') ?? 'document'
      if (!this.evaluated || !this.hasAllFalseTest()) {
        return json({ ...sceneEmpty, grouping })
      }
      return json(grouping === 'byKillSector' ? sceneKilledSector : sceneKilled)
    }
    if (method === 'GET' && target.pathname === '/node/0/logic') {
      return json(nodeLogic)
    }
    if (method === 'GET' && target.pathname.startsWith('/node/')) {
      return errorBody(404, 'InvalidPath', 'no such node')
    }
    return errorBody(404, 'NotFound', `no route for ${method} ${target.pathname}`)
  }
}
