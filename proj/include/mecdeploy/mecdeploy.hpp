// Umbrella header.
#ifndef MECDEPLOY_MECDEPLOY_HPP
#define MECDEPLOY_MECDEPLOY_HPP

#include <mecdeploy/edge_model.hpp>
#include <mecdeploy/error.hpp>
#include <mecdeploy/optimizer.hpp>
#include <mecdeploy/simulator.hpp>

#endif // MECDEPLOY_MECDEPLOY_HPP
