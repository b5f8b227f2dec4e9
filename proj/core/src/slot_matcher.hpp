#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "mcbc/request.hpp"
#include "mcbc/set_system.hpp"

namespace mcbc::detail {

// Incremental matcher between request slots and server capacity. An item
// reads any given server at most once; a server hands out at most t items.
// Augmenting paths probe servers in ascending index order, so results are
// deterministic. Mutations go through a journal so callers can roll back
// to a mark (used by the exhaustive enumerator).
class SlotMatcher {
 public:
  SlotMatcher(const McbcCode& code, int t)
      : code_(code),
        t_(t),
        used_(static_cast<size_t>(code.n) * code.m, 0),
        load_(code.m, 0),
        users_(code.m),
        vis_item_(code.n + 1, 0),
        vis_server_(code.m + 1, 0) {}

  // Tries to route one more read of `item`; false when impossible.
  bool add_slot(int item) {
    ++stamp_;
    return augment(item);
  }

  size_t mark() const { return journal_.size(); }

  void rollback(size_t mark) {
    while (journal_.size() > mark) {
      auto [item, server, added] = journal_.back();
      journal_.pop_back();
      if (added)
        detach(item, server);
      else
        attach(item, server);
    }
  }

  Assignment assignment() const {
    Assignment a;
    a.reads = users_;
    return a;
  }

 private:
  size_t edge(int item, int server) const {
    return static_cast<size_t>(item - 1) * code_.m + (server - 1);
  }

  void attach(int item, int server) {
    used_[edge(item, server)] = 1;
    ++load_[server - 1];
    auto& u = users_[server - 1];
    u.insert(std::upper_bound(u.begin(), u.end(), item), item);
  }

  void detach(int item, int server) {
    used_[edge(item, server)] = 0;
    --load_[server - 1];
    auto& u = users_[server - 1];
    u.erase(std::find(u.begin(), u.end(), item));
  }

  void take(int item, int server) {
    attach(item, server);
    journal_.emplace_back(item, server, true);
  }

  void release(int item, int server) {
    detach(item, server);
    journal_.emplace_back(item, server, false);
  }

  bool augment(int item) {
    vis_item_[item] = stamp_;
    for (int server : code_.item_view.blocks[item - 1]) {
      if (used_[edge(item, server)] || vis_server_[server] == stamp_) continue;
      vis_server_[server] = stamp_;
      if (load_[server - 1] < t_) {
        take(item, server);
        return true;
      }
      // Server full: try to reroute one of its current readers.
      std::vector<int> occupants = users_[server - 1];
      for (int other : occupants) {
        if (vis_item_[other] == stamp_) continue;
        if (augment(other)) {
          release(other, server);
          take(item, server);
          return true;
        }
      }
    }
    return false;
  }

  const McbcCode& code_;
  int t_;
  std::vector<uint8_t> used_;
  std::vector<int> load_;
  std::vector<std::vector<int>> users_;  // sorted readers per server
  std::vector<unsigned> vis_item_, vis_server_;
  unsigned stamp_ = 0;
  std::vector<std::tuple<int, int, bool>> journal_;
};

}  // namespace mcbc::detail
