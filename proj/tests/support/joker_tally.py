# Independent brute force for the 53-card deck with one joker.
from itertools import combinations
from collections import Counter
V,S=13,4
runs=[frozenset([1,2,3,4,V])]+[frozenset(range(l,l+5)) for l in range(1,V-3)]
top=frozenset(range(V-4,V+1))
order=['royal-flush','straight-flush','four-of-a-kind','full-house','flush','straight','three-of-a-kind','two-pair','pair','high-card']
def cls(cards):
    vals=[v for v,s in cards]; c=sorted(Counter(vals).values(),reverse=True)
    flush=len(set(s for v,s in cards))==1
    st=len(c)==5 and frozenset(vals) in runs
    if st and flush: return 0 if frozenset(vals)==top else 1
    if c[0]>=4: return 2
    if c==[3,2]: return 3
    if flush: return 4
    if st: return 5
    if c[0]==3: return 6
    if c[:2]==[2,2]: return 7
    if c[0]==2: return 8
    return 9
deck=[(v,s) for v in range(1,V+1) for s in range(1,S+1)]
tally=[0]*10
for h in combinations(deck,5): tally[cls(h)]+=1
five=0
for h in combinations(deck,4):
    best=min(cls(h+(x,)) for x in deck)
    tally[best]+=1
    if best==2 and max(Counter(v for v,s in h).values())==4: five+=1
for n,t in zip(order,tally): print(f"{n},{t}")
print(f"five-of-a-kind,{five}")
