#pragma once

#include "seqvote/agenda.hpp"
#include "seqvote/bitset.hpp"
#include "seqvote/candidates.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/graphwin.hpp"
#include "seqvote/hardness.hpp"
#include "seqvote/io.hpp"
#include "seqvote/knockout.hpp"
#include "seqvote/majority.hpp"
#include "seqvote/model.hpp"
#include "seqvote/notion.hpp"
#include "seqvote/oracle.hpp"
#include "seqvote/profwin.hpp"
#include "seqvote/random.hpp"
#include "seqvote/relation.hpp"
#include "seqvote/selfcheck.hpp"
