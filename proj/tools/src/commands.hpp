#pragma once

#include <string>
#include <vector>

namespace hyplat::cli {

struct CommonOpts {
  bool json = false;
  bool timings = false;
};

struct AnalyzeOpts : CommonOpts {
  std::string path;
  long isotropy_height = 64;
};

struct FixsubOpts : CommonOpts {
  std::string path;
  std::string perm;
  std::string generators;  // comma-separated words, empty = none
  int centralizer_maxlen = 6;
  int order_cap = 512;
};

struct OrderOpts : CommonOpts {
  std::string path;
  std::string word;
  int cap = 512;
};

struct QuatSymbolOpts : CommonOpts {
  std::string a, b;
};

struct QuatPslOpts : CommonOpts {
  std::string algebra;  // "D(-1,-1)"
  std::string q;        // "w,x,y,z"
};

struct QuatSplitOpts : CommonOpts {
  std::string algebra;
};

struct SkewAnalyzeOpts : CommonOpts {
  std::string path;
};

struct SkewInvolutionOpts : CommonOpts {
  std::string path;
  std::string submodule_path;
};

int cmd_analyze(const AnalyzeOpts&);
int cmd_fixsub(const FixsubOpts&);
int cmd_order(const OrderOpts&);
int cmd_quat_symbol(const QuatSymbolOpts&);
int cmd_quat_psl(const QuatPslOpts&);
int cmd_quat_split(const QuatSplitOpts&);
int cmd_skewherm_analyze(const SkewAnalyzeOpts&);
int cmd_skewherm_involution(const SkewInvolutionOpts&);

}  // namespace hyplat::cli
