import { fetchSearch, FetchLike, LatestWins } from "./api.js";
import {
  initialState,
  PanelId,
  selectResult,
  togglePanel,
  ViewState,
  withError,
  withPending,
  withResponse,
  withValidation,
} from "./state.js";

/**
 * Holds the view state and serializes query submissions: a newer submission
 * invalidates any in-flight one, whose late response is then ignored.
 */
export class SearchController {
  state: ViewState = initialState();
  private guard = new LatestWins();

  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike,
    private onChange: (state: ViewState) => void = () => {},
  ) {}

  private commit(state: ViewState): ViewState {
    this.state = state;
    this.onChange(state);
    return state;
  }

  async submit(text: string): Promise<ViewState> {
    const query = text.trim();
    if (!query) {
      return this.commit(withValidation(this.state, "Please enter a query."));
    }
    const ticket = this.guard.start();
    this.commit(withPending(this.state, query));
    try {
      const response = await fetchSearch(this.baseUrl, query, this.fetchImpl);
      if (!this.guard.isCurrent(ticket)) {
        return this.state; // stale response: a newer submission owns the view
      }
      return this.commit(withResponse(this.state, response));
    } catch (err) {
      if (!this.guard.isCurrent(ticket)) {
        return this.state;
      }
      const message = err instanceof Error ? err.message : String(err);
      return this.commit(withError(this.state, message));
    }
  }

  toggle(panel: PanelId): ViewState {
    return this.commit(togglePanel(this.state, panel));
  }

  select(rank: number | null): ViewState {
    return this.commit(selectResult(this.state, rank));
  }
}
