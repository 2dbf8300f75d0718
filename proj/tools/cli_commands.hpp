#pragma once

namespace satgame::cli {

int run(int argc, char** argv);

}  // namespace satgame::cli
