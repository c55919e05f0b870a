#pragma once

#include "gsym/partition.hpp"
#include "gsym/rational.hpp"

namespace gsym {

/// Exact irreducible character value chi^mu(rho) of S_k, |mu| = |rho| = k.
Integer sn_character(const Partition& mu, const Partition& rho);

/// Degree f^mu via the hook length formula.
Integer hook_degree(const Partition& mu);

/// Centralizer order z_rho = prod_i i^{m_i} m_i! in S_|rho|.
Integer sn_centralizer_order(const Partition& rho);

} // namespace gsym
